package uas.service;

public class AdminLoginService extends UasService {
    protected int adminLevel;

    public AdminLoginService() {
        super("AdminLoginService");
    }

    @Override
    public boolean authenticate(String user, String password) {
        return true;
    }

    public void resetPassword(String user) {
        System.out.println("AdminLoginService.resetPassword");
    }
}
