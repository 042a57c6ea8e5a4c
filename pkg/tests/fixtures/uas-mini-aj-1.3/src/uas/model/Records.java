package uas.model;

class StudentRecord {
    protected String name;

    public String getName() {
        return "getName";
    }
}

class StaffRecord {
    protected String name;

    public String getName() {
        return "getName";
    }
}

class CourseRecord {
    protected String code;

    public String getCode() {
        return "getCode";
    }
}

class ResultRecord {
    protected String grade;

    public String getGrade() {
        return "getGrade";
    }
}

class Notification {
    protected String message;

    public String getMessage() {
        return "getMessage";
    }
}

class Subscriber {
    protected String address;
}
