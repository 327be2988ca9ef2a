package android;

public class Helper {
    /** Not part of the API tree. */
    public int value() { return 2; }
}
