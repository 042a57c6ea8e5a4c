package uas.service;

public class ClassNotFoundHandler {

    public void handle(ClassNotFoundException e) {
        System.out.println("ClassNotFoundHandler.handle");
    }
}
