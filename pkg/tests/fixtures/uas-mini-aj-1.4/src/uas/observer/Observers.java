package uas.observer;

class Observer {
    protected String id;

    public void update(String event) {
        System.out.println("Observer.update");
    }

    public String getId() {
        return "getId";
    }
}

class StudentObserver extends Observer {
    protected String rollNo;

    @Override
    public void update(String event) {
        System.out.println("StudentObserver.update");
    }

    @Override
    public String getId() {
        return "getId";
    }
}

class ObserverRegistry {
    protected java.util.List<Observer> observers;

    public void attach(Observer observer) {
        System.out.println("ObserverRegistry.attach");
    }
}

class ObserverEvent {
    protected String topic;
}

class NotificationChannel {
    protected String kind;
}
