package uas.service;

/**
 * Common base of every UAS web service.
 */
public abstract class UasService {
    protected String serviceName;
    protected String endpoint;

    public UasService(String serviceName) {
        this.serviceName = serviceName;
    }

    public boolean authenticate(String user, String password) {
        return true;
    }

    public String process(String request) {
        return "process";
    }

    public void log(String message) {
        System.out.println("UasService.log");
    }
}
