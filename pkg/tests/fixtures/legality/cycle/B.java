package demo;

public class B extends A {
    public void ping() {}
}
