package uas.service;

public class StudentRegisterService extends UasService {
    protected int registerNo;
    protected String dbUrl;

    public StudentRegisterService() {
        super("StudentRegisterService");
    }

    @Override
    public String process(String request) {
        return "process";
    }

    @Override
    public void log(String message) {
        System.out.println("StudentRegisterService.log");
    }
}
