package uas.model;

class UasException extends Exception {
    protected long serialVersionUID;

    public UasException(String message) {
        super(message);
    }
}

class InvalidCredentialException extends UasException {

    public InvalidCredentialException(String message) {
        super(message);
    }
}

class RegistrationException extends UasException {

    public RegistrationException(String message) {
        super(message);
    }
}

class ResultNotFoundException extends UasException {

    public ResultNotFoundException(String message) {
        super(message);
    }
}
