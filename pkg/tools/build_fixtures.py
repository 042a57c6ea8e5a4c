"""Regenerate the desk-scale UAS fixture corpora under tests/fixtures/.

Each version is described below as a small design: classes with the
methods they add or override, aspects with tagged pointcuts and advice.
The redefinition tags are set by hand while designing; the script sums
them and refuses to write anything unless the sums agree with the
hand-typed counters in MANIFESTS. The analyzer itself is never used here.

    python tools/build_fixtures.py
"""

from __future__ import annotations

import copy
import json
import shutil
from dataclasses import dataclass, field
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


@dataclass
class Method:
    ret: str
    name: str
    params: str = ""
    mods: str = "public"
    body: str | None = None  # None -> default body by return type; "" -> abstract


@dataclass
class Cls:
    name: str
    pkg: str
    parent: str | None = None  # in-corpus simple name
    ext_parent: str | None = None  # external supertype text
    implements: list[str] = field(default_factory=list)
    methods: list[Method] = field(default_factory=list)
    overrides: list[str] = field(default_factory=list)
    fields: list[tuple[str, str]] = field(default_factory=list)
    shadows: list[tuple[str, str]] = field(default_factory=list)  # (new type, inherited name)
    ctor: str | None = None  # parameter list of a constructor, if any
    abstract: bool = False
    file: str | None = None  # group several classes in one file
    doc: str = ""


@dataclass
class Pointcut:
    name: str
    expr: str | None  # None -> abstract
    redefines: bool = False  # hand tag
    params: str = ""


@dataclass
class Advice:
    header: str  # e.g. 'after() returning : logged()'
    body: list[str]
    redefined: bool  # hand tag


@dataclass
class Asp:
    name: str
    pkg: str
    parent: str | None = None
    abstract: bool = False
    pointcuts: list[Pointcut] = field(default_factory=list)
    advices: list[Advice] = field(default_factory=list)
    methods: list[Method] = field(default_factory=list)
    overrides: list[Method] = field(default_factory=list)
    fields: list[tuple[str, str, str]] = field(default_factory=list)  # (type, name, init)
    shadows: list[tuple[str, str, str]] = field(default_factory=list)
    doc: str = ""


@dataclass
class Interface:
    name: str
    pkg: str
    methods: list[Method]
    file: str | None = None


@dataclass
class Version:
    label: str
    directory: str
    classes: list[Cls]
    aspects: list[Asp] = field(default_factory=list)
    interfaces: list[Interface] = field(default_factory=list)


# ---------------------------------------------------------------- Java side

SVC = "uas.service"
MODEL = "uas.model"
OBS = "uas.observer"
ASP = "uas.aspects"


def java_1_0() -> list[Cls]:
    base = Cls(
        "UasService", SVC,
        methods=[
            Method("boolean", "authenticate", "String user, String password"),
            Method("String", "process", "String request"),
            Method("void", "log", "String message"),
        ],
        fields=[("String", "serviceName"), ("String", "endpoint")],
        ctor="String serviceName", abstract=True,
        doc="Common base of every UAS web service.",
    )
    return [
        base,
        Cls("StudentLoginService", SVC, "UasService", overrides=["authenticate", "log"], fields=[("String", "studentId")]),
        Cls("StaffLoginService", SVC, "UasService", overrides=["authenticate", "log"], fields=[("String", "staffId")]),
        Cls("StudentRegisterService", SVC, "UasService", overrides=["process", "log"], fields=[("int", "registerNo")]),
        Cls("StaffRegisterService", SVC, "UasService", overrides=["process", "log"], fields=[("String", "department")]),
        Cls("ResultService", SVC, "UasService", overrides=["process", "log"], fields=[("int", "semester")]),
        Cls("CourseService", SVC, "UasService", overrides=["process"], fields=[("String", "courseCode"), ("int", "credits")]),
    ]


def java_1_1() -> list[Cls]:
    classes = {c.name: c for c in java_1_0()}
    classes["UasService"].fields.append(("String", "logFile"))
    classes["StudentRegisterService"].fields.append(("String", "dbUrl"))
    classes["StaffRegisterService"].fields.append(("String", "dbUrl"))
    return list(classes.values())


def java_1_2() -> list[Cls]:
    classes = java_1_1()
    classes += [
        Cls("ProfessorLoginService", SVC, "UasService", overrides=["authenticate"],
            methods=[Method("void", "lockAccount", "String user")], fields=[("String", "professorId")]),
        Cls("AdminLoginService", SVC, "UasService", overrides=["authenticate"],
            methods=[Method("void", "resetPassword", "String user")], fields=[("int", "adminLevel")]),
        Cls("HostelLoginService", SVC, "StudentLoginService", overrides=["authenticate"],
            fields=[("String", "roomNo")], shadows=[("String", "studentId")]),
        Cls("LibraryLoginService", SVC, "StaffLoginService", overrides=["log"], fields=[("String", "cardNo")]),
        Cls("PasswordPolicy", SVC, methods=[Method("boolean", "validate", "String password")],
            fields=[("int", "minLength"), ("String", "pattern")]),
        Cls("SessionManager", SVC, methods=[Method("String", "open", "String user"), Method("void", "close", "String sessionId")],
            fields=[("int", "timeout"), ("int", "activeSessions")]),
        Cls("AuditTrail", SVC, methods=[Method("void", "append", "String entry")], fields=[("String", "trailFile")]),
        Cls("DatabaseConnection", SVC, methods=[Method("void", "connect"), Method("void", "disconnect")],
            fields=[("String", "url"), ("String", "user")]),
        Cls("CredentialStore", SVC, methods=[Method("String", "lookup", "String user")], fields=[("String", "storePath")]),
        Cls("LoginAttempt", SVC, fields=[("String", "userName"), ("long", "attemptTime"), ("boolean", "success")]),
    ]
    return classes


def java_1_3() -> list[Cls]:
    classes = {c.name: c for c in java_1_2()}
    classes["ResultService"].fields += [("String", "publishedOn"), ("java.util.List<String>", "observers")]
    classes["SessionManager"].fields.append(("long", "lastCleanup"))
    classes["CourseService"].fields.append(("String", "syllabusUrl"))
    classes["AuditTrail"].fields += [("String", "channel"), ("int", "retries")]
    return list(classes.values())


def java_1_4() -> list[Cls]:
    classes = java_1_3()
    classes += [
        Cls("ExceptionLogger", SVC, methods=[Method("void", "logException", "Exception e")], fields=[("String", "errorLog")]),
        Cls("IoErrorHandler", SVC, methods=[Method("void", "handle", "java.io.IOException e")]),
        Cls("ClassNotFoundHandler", SVC, methods=[Method("void", "handle", "ClassNotFoundException e")]),
        Cls("RuntimeErrorHandler", SVC, methods=[Method("void", "handle", "RuntimeException e")]),
        Cls("ErrorReport", SVC, methods=[Method("String", "summary")], fields=[("int", "code"), ("String", "message")]),
        Cls("RetryPolicy", SVC, methods=[Method("boolean", "shouldRetry", "int attempt")], fields=[("int", "maxRetries")]),
    ]
    return classes


AUTHENTICATOR = Interface("Authenticator", SVC, [Method("boolean", "authenticate", "String user, String password", mods="", body="")])


# ------------------------------------------------------------ AspectJ side

def aj_classes_1_1() -> list[Cls]:
    base = Cls(
        "UasService", SVC,
        methods=[Method("boolean", "authenticate", "String user, String password"), Method("String", "process", "String request")],
        fields=[("String", "serviceName"), ("String", "endpoint")],
        ctor="String serviceName", abstract=True,
        doc="Common base of every UAS web service. Logging lives in uas.aspects.",
    )
    return [
        base,
        Cls("StudentLoginService", SVC, "UasService", overrides=["authenticate"], fields=[("String", "studentId")]),
        Cls("StaffLoginService", SVC, "UasService", overrides=["authenticate"],
            methods=[Method("void", "changePassword", "String password")], fields=[("String", "staffId")]),
        Cls("StudentRegisterService", SVC, "UasService", overrides=["process"],
            methods=[Method("boolean", "validateForm", "String form")], fields=[("int", "registerNo")]),
        Cls("StaffRegisterService", SVC, "UasService", overrides=["process"],
            methods=[Method("void", "assignRole", "String role")], fields=[("String", "department")]),
        Cls("ResultService", SVC, "UasService", overrides=["process"],
            methods=[Method("void", "publish", "int semester")], fields=[("int", "semester")]),
        Cls("CourseService", SVC,
            methods=[Method("String", "process", "String request"), Method("String[]", "listCourses"), Method("void", "enroll", "String courseCode")],
            fields=[("String", "courseCode"), ("int", "credits")]),
    ]


def aj_classes_1_2() -> list[Cls]:
    base = Cls(
        "UasService", SVC,
        methods=[
            Method("boolean", "authenticate", "String user, String password"),
            Method("String", "process", "String request"),
            Method("String", "describe"),
        ],
        fields=[("String", "serviceName"), ("String", "endpoint"), ("int", "port"), ("String", "version"), ("int", "timeoutMillis")],
        ctor="String serviceName", abstract=True, implements=["Authenticator"],
        doc="Common base of every UAS web service. Logging, persistence and\nsecurity live in uas.aspects.",
    )
    return [
        base,
        Cls("LoginService", SVC, "UasService", overrides=["authenticate", "describe"],
            methods=[Method("void", "changePassword", "String password"), Method("void", "rememberDevice", "String deviceId")],
            fields=[("String", "userId"), ("String", "role"), ("int", "failedAttempts"), ("long", "lastLogin"),
                    ("boolean", "locked"), ("boolean", "captchaRequired")]),
        Cls("StudentRegisterService", SVC, "UasService", overrides=["process", "describe"],
            methods=[Method("boolean", "validateForm", "String form")], fields=[("int", "registerNo"), ("String", "programme"), ("String", "applicantName"),
                    ("String", "dateOfBirth"), ("String", "category")]),
        Cls("StaffRegisterService", SVC, "UasService", overrides=["process"],
            methods=[Method("void", "assignRole", "String role")], fields=[("String", "department"), ("String", "designation"), ("String", "joiningDate"),
                    ("int", "salaryGrade"), ("String", "supervisor")]),
        Cls("ResultService", SVC, "UasService", overrides=["process", "describe"],
            methods=[Method("void", "publish", "int semester"), Method("double", "computeGpa", "String studentId")],
            fields=[("int", "semester"), ("String", "examCell"), ("int", "maxMarks"), ("int", "passMarks"), ("String", "resultDate")]),
        Cls("CourseService", SVC,
            methods=[
                Method("String", "process", "String request"), Method("String[]", "listCourses"),
                Method("void", "enroll", "String courseCode"), Method("void", "dropCourse", "String courseCode"),
                Method("String[]", "prerequisites", "String courseCode"), Method("int", "capacity"),
            ],
            fields=[("String", "courseCode"), ("int", "credits"), ("int", "maxSeats"), ("String", "instructor"),
                    ("int", "semesterOffered"), ("boolean", "elective")]),
        Cls("Session", SVC,
            methods=[
                Method("String", "getUser"), Method("boolean", "isExpired"), Method("void", "touch"),
                Method("void", "invalidate"), Method("long", "getStartTime"),
            ],
            fields=[("String", "sessionId"), ("String", "user"), ("long", "startTime"), ("long", "lastAccess"), ("boolean", "valid"),
                    ("String", "ipAddress"), ("String", "userAgent")]),
        Cls("SessionStore", SVC,
            methods=[
                Method("void", "put", "String id, Session session"), Method("Session", "get", "String id"),
                Method("void", "remove", "String id"), Method("int", "size"), Method("void", "clear"),
                Method("int", "purgeExpired"),
            ],
            fields=[("java.util.Map<String, Session>", "sessions"), ("int", "capacity"), ("String", "evictionPolicy"), ("long", "hits")]),
    ]


def aj_classes_1_3() -> list[Cls]:
    classes = aj_classes_1_2()
    classes += [
        Cls("UasException", MODEL, ext_parent="Exception", ctor="String message", file="Exceptions",
            fields=[("long", "serialVersionUID")]),
        Cls("InvalidCredentialException", MODEL, "UasException", ctor="String message", file="Exceptions"),
        Cls("RegistrationException", MODEL, "UasException", ctor="String message", file="Exceptions"),
        Cls("ResultNotFoundException", MODEL, "UasException", ctor="String message", file="Exceptions"),
        Cls("StudentRecord", MODEL, methods=[Method("String", "getName")], file="Records",
            fields=[("String", "name")]),
        Cls("StaffRecord", MODEL, methods=[Method("String", "getName")], file="Records",
            fields=[("String", "name")]),
        Cls("CourseRecord", MODEL, methods=[Method("String", "getCode")], file="Records",
            fields=[("String", "code")]),
        Cls("ResultRecord", MODEL, methods=[Method("String", "getGrade")], file="Records",
            fields=[("String", "grade")]),
        Cls("Notification", MODEL, methods=[Method("String", "getMessage")], file="Records",
            fields=[("String", "message")]),
        Cls("Subscriber", MODEL, file="Records", fields=[("String", "address")]),
    ]
    return classes


def aj_classes_1_4() -> list[Cls]:
    classes = aj_classes_1_3()
    classes += [
        Cls("Observer", OBS, methods=[Method("void", "update", "String event"), Method("String", "getId")],
            fields=[("String", "id")], file="Observers"),
        Cls("StudentObserver", OBS, "Observer", overrides=["update", "getId"],
            fields=[("String", "rollNo")], file="Observers"),
        Cls("ObserverRegistry", OBS, methods=[Method("void", "attach", "Observer observer")],
            fields=[("java.util.List<Observer>", "observers")], file="Observers"),
        Cls("ObserverEvent", OBS, fields=[("String", "topic")], file="Observers"),
        Cls("NotificationChannel", OBS, fields=[("String", "kind")], file="Observers"),
    ]
    return classes


def trace_aspect() -> Asp:
    return Asp(
        "ServiceTrace", ASP, abstract=True,
        pointcuts=[Pointcut("serviceCall", None)],
        advices=[Advice("before() : serviceCall()", ["trace(thisJoinPoint.getSignature().getName());"], redefined=False)],
        methods=[Method("void", "trace", "String operation", mods="protected", body='System.out.println("enter " + operation);')],
        doc="Placeholder tracing concern; no concrete tracing aspect exists yet.",
    )


def logging_aspects(version: int) -> list[Asp]:
    login = "execution(* uas.service.*LoginService.authenticate(..))"
    if version >= 2:
        login = "execution(* uas.service.LoginService.authenticate(..))"
    file_log = Asp(
        "FileLog", ASP, abstract=True,
        pointcuts=[Pointcut("logged", None)],
        advices=[Advice("before() : logged()", ["recordEvent(thisJoinPoint.toString());"], redefined=False)],
        methods=[Method("void", "recordEvent", "String event", mods="protected",
                        body='System.out.println(logFile + ": " + event);')],
        fields=[("String", "logFile", '"uas.log"'), ("float", "retentionDays", "30.0f")],
        doc="Records who logged in and when.",
    )
    audit = Asp(
        "AuditLog", ASP, parent="FileLog",
        pointcuts=[Pointcut("logged", login, redefines=True)],
        advices=[Advice("after() returning : logged()", ['recordEvent("audit " + thisJoinPoint.getArgs()[0]);'], redefined=True)],
    )
    if version >= 2:
        audit.fields.append(("String", "auditTarget", '"registrar"'))
    out = [file_log, audit]
    if version >= 2:
        event = Asp(
            "EventLog", ASP, parent="FileLog",
            pointcuts=[Pointcut("logged", "execution(* uas.service.Session.touch(..))", redefines=True)],
            advices=[Advice("after() : logged()", ['recordEvent("session event");'], redefined=True)],
            shadows=[("double", "retentionDays", "90.0")],
        )
        out.append(event)
    if version >= 3:
        file_log.pointcuts.append(Pointcut("loggedOut", None))
        audit.pointcuts.append(Pointcut("loggedOut", "execution(* uas.service.Session.invalidate(..))", redefines=True))
        event.pointcuts.append(Pointcut("loggedOut", "call(* uas.service.SessionStore.remove(..))", redefines=True))
    return out


def persistence_aspects(version: int) -> list[Asp]:
    register = "execution(* uas.service.*RegisterService.process(..))"
    base = Asp(
        "DatabasePersistence", ASP, abstract=True,
        pointcuts=[Pointcut("connect", register)],
        advices=[Advice("before() : connect()", ["openConnection();"], redefined=False)],
        methods=[Method("void", "openConnection", mods="protected", body='System.out.println("connect " + connectionUrl);')],
        fields=[("String", "connectionUrl", '"jdbc:uas"')],
        doc="Database connection shared by every persistence concern.",
    )
    sql = Asp(
        "SqlTranslatePersistence", ASP, parent="DatabasePersistence",
        pointcuts=[Pointcut("insertOp", "call(* uas.service.*RegisterService.process(String)) && args(request)", params="String request")],
        advices=[Advice("after() : connect()", ["translate();"], redefined=True)],
        methods=[Method("void", "translate", body='System.out.println("INSERT INTO register ...");')],
        fields=[("String", "tableName", '"register"')],
    )
    if version >= 3:
        base.pointcuts.append(Pointcut("disconnect", "execution(* uas.service.SessionStore.clear(..))"))
        sql.pointcuts += [
            Pointcut("updateOp", "call(* uas.service.ResultService.publish(int))"),
            Pointcut("deleteOp", "call(* uas.service.CourseService.dropCourse(String))"),
        ]
    return [base, sql]


def security_aspects(version: int) -> list[Asp]:
    check = Method("boolean", "checkCredentials", "String user", mods="protected abstract", body="")
    base = Asp(
        "LoginSecurity", ASP, abstract=True,
        pointcuts=[Pointcut("loginAttempt", "execution(* uas.service.LoginService.authenticate(String, String))")],
        advices=[Advice("before() : loginAttempt()", ['checkCredentials("anonymous");'], redefined=False)],
        methods=[check],
        fields=[("int", "maxAttempts", "3")],
        doc="Single login concern shared by every kind of user.",
    )
    student = Asp(
        "StudentLoginSecurity", ASP, parent="LoginSecurity",
        advices=[Advice("boolean around() : loginAttempt() && within(uas.service.LoginService)",
                        ["return proceed();"], redefined=True)],
        overrides=[Method("boolean", "checkCredentials", "String user", mods="protected", body='return user.startsWith("S");')],
        fields=[("String", "studentRealm", '"students"')],
    )
    staff = Asp(
        "StaffLoginSecurity", ASP, parent="LoginSecurity",
        advices=[Advice("after() : execution(* uas.service.StaffRegisterService.assignRole(..))",
                        ['this.checkCredentials("staff");'], redefined=True)],
        overrides=[Method("boolean", "checkCredentials", "String user", mods="protected", body='return user.startsWith("E");')],
        fields=[("String", "staffRealm", '"staff"')],
    )
    out = [base, student, staff]
    if version >= 3:
        base.pointcuts.append(Pointcut("protectedResource", None))
        student.pointcuts.append(Pointcut("protectedResource", "execution(* uas.service.ResultService.computeGpa(..))", redefines=True))
        staff.pointcuts.append(Pointcut("protectedResource", "execution(* uas.service.StaffRegisterService.*(..))", redefines=True))
        out.append(Asp(
            "DatabaseSecurity", ASP, parent="LoginSecurity",
            pointcuts=[
                Pointcut("protectedResource", "call(* uas.service.SessionStore.*(..))", redefines=True),
                Pointcut("dbAccess", "call(* uas.model.*Record.*(..))"),
            ],
            advices=[
                Advice("before() : protectedResource()", ['checkCredentials("db");'], redefined=True),
                Advice("after() throwing : execution(* uas.service.SessionStore.get(..))", ['checkCredentials("db-read");'], redefined=True),
            ],
            overrides=[Method("boolean", "checkCredentials", "String user", mods="protected", body="return user != null;")],
            fields=[("String", "dbRole", '"uas_app"')],
        ))
    return out


def exception_aspects() -> list[Asp]:
    display = Method("void", "displayException", "Throwable e", mods="protected",
                     body='System.err.println("UAS error: " + e);')
    base = Asp(
        "ExceptionHandling", ASP, parent="FileLog", abstract=True,
        pointcuts=[
            Pointcut("logged", "execution(* uas.service.*.*(..))", redefines=True),
            Pointcut("loggedOut", "execution(* uas.service.Session.invalidate(..))", redefines=True),
        ],
        advices=[Advice("after() throwing(Throwable e) : logged()", ["displayException(e);"], redefined=True)],
        methods=[display],
        doc="Every exception raised in a service is displayed and logged.",
    )

    def handler(name, text, advice=None):
        return Asp(
            name, ASP, parent="ExceptionHandling",
            overrides=[Method("void", "displayException", "Throwable e", mods="protected",
                              body=f'System.err.println("{text}: " + e.getMessage());')],
            advices=[advice] if advice else [],
        )

    return [
        base,
        handler("IoExceptionHandler", "I/O failure"),
        handler("ClassNotFoundHandler", "missing class"),
        handler("RuntimeExceptionHandler", "runtime failure",
                Advice("after() throwing(RuntimeException e) : execution(* uas.model.*.*(..))",
                       ["displayException(e);"], redefined=True)),
    ]


def versions() -> list[Version]:
    out = []
    for i, make in enumerate([java_1_0, java_1_1, java_1_2, java_1_3, java_1_4]):
        out.append(Version(f"UAS J 1.{i}", f"uas-mini-j-1.{i}", make(), interfaces=[AUTHENTICATOR] if i >= 2 else []))
    aj = [
        (aj_classes_1_1_as_1_0(), [trace_aspect()], []),
        (aj_classes_1_1(), logging_aspects(1) + persistence_aspects(1), []),
        (aj_classes_1_2(), logging_aspects(2) + persistence_aspects(2) + security_aspects(2), [AUTHENTICATOR]),
        (aj_classes_1_3(), logging_aspects(3) + persistence_aspects(3) + security_aspects(3), [AUTHENTICATOR]),
        (aj_classes_1_4(), logging_aspects(3) + persistence_aspects(3) + security_aspects(3) + exception_aspects(), [AUTHENTICATOR]),
    ]
    for i, (classes, aspects, ifaces) in enumerate(aj):
        out.append(Version(f"UAS AJ 1.{i}", f"uas-mini-aj-1.{i}", classes, aspects, ifaces))
    return out


def aj_classes_1_1_as_1_0() -> list[Cls]:
    # AJ 1.0 holds only the core concerns, structured exactly like J 1.0
    return java_1_0()


# Hand counts. Keep these typed out; never derive them from the designs.
MANIFESTS = {
    "uas-mini-j-1.0": dict(A_r=0, A_a=0, P_r=0, P_a=0, Att_r=0, Att_a=9, M_r=11, M_a=14, TCA=0, TAA=0, TEC=6, TAC=7),
    "uas-mini-j-1.1": dict(A_r=0, A_a=0, P_r=0, P_a=0, Att_r=0, Att_a=12, M_r=11, M_a=14, TCA=0, TAA=0, TEC=6, TAC=7),
    "uas-mini-j-1.2": dict(A_r=0, A_a=0, P_r=0, P_a=0, Att_r=1, Att_a=28, M_r=15, M_a=27, TCA=0, TAA=0, TEC=10, TAC=17),
    "uas-mini-j-1.3": dict(A_r=0, A_a=0, P_r=0, P_a=0, Att_r=1, Att_a=34, M_r=15, M_a=27, TCA=0, TAA=0, TEC=10, TAC=17),
    "uas-mini-j-1.4": dict(A_r=0, A_a=0, P_r=0, P_a=0, Att_r=1, Att_a=38, M_r=15, M_a=33, TCA=0, TAA=0, TEC=10, TAC=23),
    "uas-mini-aj-1.0": dict(A_r=0, A_a=1, P_r=0, P_a=1, Att_r=0, Att_a=9, M_r=11, M_a=14, TCA=0, TAA=1, TEC=6, TAC=7),
    "uas-mini-aj-1.1": dict(A_r=2, A_a=4, P_r=1, P_a=4, Att_r=0, Att_a=13, M_r=5, M_a=14, TCA=2, TAA=4, TEC=5, TAC=7),
    "uas-mini-aj-1.2": dict(A_r=5, A_a=8, P_r=2, P_a=6, Att_r=1, Att_a=52, M_r=7, M_a=33, TCA=5, TAA=8, TEC=4, TAC=8),
    "uas-mini-aj-1.3": dict(A_r=7, A_a=10, P_r=7, P_a=17, Att_r=1, Att_a=60, M_r=7, M_a=38, TCA=6, TAA=9, TEC=7, TAC=18),
    "uas-mini-aj-1.4": dict(A_r=9, A_a=12, P_r=9, P_a=19, Att_r=1, Att_a=65, M_r=9, M_a=43, TCA=9, TAA=13, TEC=8, TAC=23),
}

# Rendered values reported for the original application.
EXPECTED = {
    "uas-mini-j-1.0": ["NA", "NA", "0.0", "NA", "0.785", "0.857"],
    "uas-mini-j-1.1": ["NA", "NA", "0.0", "NA", "0.785", "0.857"],
    "uas-mini-j-1.2": ["NA", "NA", "0.035", "NA", "0.555", "0.588"],
    "uas-mini-j-1.3": ["NA", "NA", "0.029", "NA", "0.555", "0.588"],
    "uas-mini-j-1.4": ["NA", "NA", "0.026", "NA", "0.454", "0.434"],
    "uas-mini-aj-1.0": ["0.0", "0.0", "0.0", "0.0", "0.785", "0.857"],
    "uas-mini-aj-1.1": ["0.5", "0.25", "0.0", "0.5", "0.357", "0.714"],
    "uas-mini-aj-1.2": ["0.625", "0.333", "0.019", "0.625", "0.212", "0.5"],
    "uas-mini-aj-1.3": ["0.7", "0.411", "0.016", "0.666", "0.184", "0.388"],
    "uas-mini-aj-1.4": ["0.75", "0.473", "0.015", "0.692", "0.209", "0.347"],
}
METRICS = ["AdIF", "PIF", "AttIF", "AIF", "CMIF", "CIF"]


# ------------------------------------------------------------- design sums

def design_counts(v: Version) -> dict[str, int]:
    """Sum the hand tags of a design (no parsing involved)."""
    by_name = {c.name: c for c in v.classes}

    def class_ancestors(c):
        while c.parent:
            c = by_name[c.parent]
            yield c

    m_a = m_r = att_a = att_r = tec = 0
    for c in v.classes:
        for name in c.overrides:
            assert any(name in [m.name for m in a.methods] for a in class_ancestors(c)), (c.name, name)
        m_a += len(c.methods) + len(c.overrides)
        m_r += len(c.overrides)
        att_a += len(c.fields) + len(c.shadows)
        att_r += len(c.shadows)
        tec += c.parent is not None
    a_a = sum(len(a.advices) for a in v.aspects)
    a_r = sum(ad.redefined for a in v.aspects for ad in a.advices)
    p_a = sum(len(a.pointcuts) for a in v.aspects)
    p_r = sum(p.redefines for a in v.aspects for p in a.pointcuts)
    att_a += sum(len(a.fields) + len(a.shadows) for a in v.aspects)
    att_r += sum(len(a.shadows) for a in v.aspects)
    tca = sum(not a.abstract for a in v.aspects)
    return dict(A_r=a_r, A_a=a_a, P_r=p_r, P_a=p_a, Att_r=att_r, Att_a=att_a, M_r=m_r, M_a=m_a,
                TCA=tca, TAA=len(v.aspects), TEC=tec, TAC=len(v.classes))


# --------------------------------------------------------------- rendering

def default_body(ret: str, owner: str, name: str) -> str:
    if ret == "void":
        return f'System.out.println("{owner}.{name}");'
    if ret == "boolean":
        return "return true;"
    if ret in ("int", "long", "double", "float"):
        return "return 0;"
    if ret == "String":
        return f'return "{name}";'
    return "return null;"


def render_method(m: Method, owner: str, indent: str = "    ", override: bool = False) -> list[str]:
    mods = f"{m.mods} " if m.mods else ""
    head = f"{indent}{mods}{m.ret} {m.name}({m.params})"
    lines = [f"{indent}@Override"] if override else []
    if m.body == "":
        return lines + [head + ";"]
    body = m.body if m.body is not None else default_body(m.ret, owner, m.name)
    return lines + [head + " {", f"{indent}    {body}", f"{indent}}}"]


def field_default(t: str) -> str:
    return {"int": "0", "long": "0L", "boolean": "false", "double": "0.0", "float": "0.0f"}.get(t, "null")


def render_class(c: Cls, by_name: dict[str, Cls], public: bool) -> list[str]:
    lines = []
    if c.doc:
        lines += ["/**"] + [f" * {d}" for d in c.doc.split("\n")] + [" */"]
    head = f"{'public ' if public else ''}{'abstract ' if c.abstract else ''}class {c.name}"
    if c.parent:
        head += f" extends {c.parent}"
    elif c.ext_parent:
        head += f" extends {c.ext_parent}"
    if c.implements:
        head += " implements " + ", ".join(c.implements)
    lines.append(head + " {")
    for t, n in c.fields:
        lines.append(f"    protected {t} {n};")
    for t, n in c.shadows:
        lines.append(f"    protected {t} {n}; // narrows the inherited field")
    if c.ctor is not None:
        lines.append("")
        arg = c.ctor.split()[-1] if c.ctor else ""
        lines.append(f"    public {c.name}({c.ctor}) {{")
        if c.parent or c.ext_parent:
            lines.append(f"        super({arg});")
        elif arg and arg in [n for _, n in c.fields]:
            lines.append(f"        this.{arg} = {arg};")
        lines.append("    }")
    elif c.parent and by_name[c.parent].ctor:
        lines.append("")
        lines.append(f"    public {c.name}() {{")
        lines.append(f'        super("{c.name}");')
        lines.append("    }")
    for name in c.overrides:
        anc = by_name[c.parent]
        while name not in [m.name for m in anc.methods]:
            anc = by_name[anc.parent]
        base = next(m for m in anc.methods if m.name == name)
        lines.append("")
        lines += render_method(Method(base.ret, base.name, base.params, "public"), c.name, override=True)
    for m in c.methods:
        lines.append("")
        lines += render_method(m, c.name)
    lines.append("}")
    return lines


def render_aspect(a: Asp) -> list[str]:
    lines = []
    if a.doc:
        lines += ["/**", f" * {a.doc}", " */"]
    head = f"public {'abstract ' if a.abstract else ''}aspect {a.name}"
    if a.parent:
        head += f" extends {a.parent}"
    lines.append(head + " {")
    for t, n, init in a.fields:
        lines.append(f"    protected {t} {n} = {init};")
    for t, n, init in a.shadows:
        lines.append(f"    protected {t} {n} = {init}; // refined from the base aspect")
    if a.fields or a.shadows:
        lines.append("")
    for p in a.pointcuts:
        if p.expr is None:
            lines.append(f"    public abstract pointcut {p.name}({p.params});")
        else:
            lines.append(f"    public pointcut {p.name}({p.params}) :")
            lines.append(f"        {p.expr};")
    for ad in a.advices:
        lines.append("")
        lines.append(f"    {ad.header} {{")
        lines += [f"        {s}" for s in ad.body]
        lines.append("    }")
    for m in a.methods:
        lines.append("")
        lines += render_method(m, a.name)
    for m in a.overrides:
        lines.append("")
        lines += render_method(m, a.name)
    lines.append("}")
    return lines


def write_version(v: Version) -> None:
    root = OUT / v.directory
    if root.exists():
        shutil.rmtree(root)
    by_name = {c.name: c for c in v.classes}
    files: dict[tuple[str, str], list] = {}
    for c in v.classes:
        files.setdefault((c.pkg, c.file or c.name), []).append(c)
    for iface in v.interfaces:
        files.setdefault((iface.pkg, iface.file or iface.name), []).append(iface)
    for (pkg, fname), members in files.items():
        path = root / "src" / Path(*pkg.split(".")) / f"{fname}.java"
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = [f"package {pkg};", ""]
        other_pkgs = sorted({by_name[c.parent].pkg for c in members if isinstance(c, Cls) and c.parent} - {pkg})
        lines += [f"import {p}.*;" for p in other_pkgs]
        if other_pkgs:
            lines.append("")
        public_done = False
        for member in members:
            public = not public_done and member.name == fname
            if isinstance(member, Interface):
                lines.append(f"{'public ' if public else ''}interface {member.name} {{")
                for m in member.methods:
                    lines += render_method(m, member.name)
                lines.append("}")
            else:
                lines += render_class(member, by_name, public)
            public_done = public_done or public
            lines.append("")
        path.write_text("\n".join(lines).rstrip() + "\n", encoding="utf-8")
    for a in v.aspects:
        path = root / "src" / Path(*a.pkg.split(".")) / f"{a.name}.aj"
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = [f"package {a.pkg};", ""] + render_aspect(a)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    manifest = {
        "version": v.label,
        "counts": MANIFESTS[v.directory],
        "expected": dict(zip(METRICS, EXPECTED[v.directory])),
    }
    (root / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    n_files = len(files) + len(v.aspects)
    assert n_files <= 25, (v.directory, n_files)


def main() -> None:
    vs = versions()
    problems = []
    for v in vs:
        got = design_counts(v)
        want = MANIFESTS[v.directory]
        if got != want:
            diff = {k: (got[k], want[k]) for k in want if got[k] != want[k]}
            problems.append(f"{v.directory}: design != manifest {diff}")
    if problems:
        raise SystemExit("\n".join(problems))
    for v in vs:
        write_version(copy.deepcopy(v))
        print(f"wrote {v.directory}")


if __name__ == "__main__":
    main()
