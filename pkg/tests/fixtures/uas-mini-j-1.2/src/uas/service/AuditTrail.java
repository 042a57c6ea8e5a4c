package uas.service;

public class AuditTrail {
    protected String trailFile;

    public void append(String entry) {
        System.out.println("AuditTrail.append");
    }
}
