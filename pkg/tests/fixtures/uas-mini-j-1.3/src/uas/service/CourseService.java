package uas.service;

public class CourseService extends UasService {
    protected String courseCode;
    protected int credits;
    protected String syllabusUrl;

    public CourseService() {
        super("CourseService");
    }

    @Override
    public String process(String request) {
        return "process";
    }
}
