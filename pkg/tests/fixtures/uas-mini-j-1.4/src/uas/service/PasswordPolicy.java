package uas.service;

public class PasswordPolicy {
    protected int minLength;
    protected String pattern;

    public boolean validate(String password) {
        return true;
    }
}
