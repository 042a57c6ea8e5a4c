package uas.service;

public class StudentRegisterService extends UasService {
    protected int registerNo;
    protected String programme;
    protected String applicantName;
    protected String dateOfBirth;
    protected String category;

    public StudentRegisterService() {
        super("StudentRegisterService");
    }

    @Override
    public String process(String request) {
        return "process";
    }

    @Override
    public String describe() {
        return "describe";
    }

    public boolean validateForm(String form) {
        return true;
    }
}
