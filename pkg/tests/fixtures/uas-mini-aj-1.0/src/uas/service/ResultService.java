package uas.service;

public class ResultService extends UasService {
    protected int semester;

    public ResultService() {
        super("ResultService");
    }

    @Override
    public String process(String request) {
        return "process";
    }

    @Override
    public void log(String message) {
        System.out.println("ResultService.log");
    }
}
