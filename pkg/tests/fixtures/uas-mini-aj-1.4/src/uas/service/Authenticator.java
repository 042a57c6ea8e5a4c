package uas.service;

public interface Authenticator {
    boolean authenticate(String user, String password);
}
