package uas.service;

public class DatabaseConnection {
    protected String url;
    protected String user;

    public void connect() {
        System.out.println("DatabaseConnection.connect");
    }

    public void disconnect() {
        System.out.println("DatabaseConnection.disconnect");
    }
}
