package uas.service;

public class SessionManager {
    protected int timeout;
    protected int activeSessions;
    protected long lastCleanup;

    public String open(String user) {
        return "open";
    }

    public void close(String sessionId) {
        System.out.println("SessionManager.close");
    }
}
