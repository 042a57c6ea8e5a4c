package uas.service;

public class StaffLoginService extends UasService {
    protected String staffId;

    public StaffLoginService() {
        super("StaffLoginService");
    }

    @Override
    public boolean authenticate(String user, String password) {
        return true;
    }

    public void changePassword(String password) {
        System.out.println("StaffLoginService.changePassword");
    }
}
