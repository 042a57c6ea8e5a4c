package uas.service;

public class ResultService extends UasService {
    protected int semester;
    protected String examCell;
    protected int maxMarks;
    protected int passMarks;
    protected String resultDate;

    public ResultService() {
        super("ResultService");
    }

    @Override
    public String process(String request) {
        return "process";
    }

    @Override
    public String describe() {
        return "describe";
    }

    public void publish(int semester) {
        System.out.println("ResultService.publish");
    }

    public double computeGpa(String studentId) {
        return 0;
    }
}
