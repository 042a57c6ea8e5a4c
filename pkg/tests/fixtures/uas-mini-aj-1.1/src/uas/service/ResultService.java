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

    public void publish(int semester) {
        System.out.println("ResultService.publish");
    }
}
