package fx.varargs;

public class Varargs {
    public void log(String fmt, Object... args) {}

    public static int sum(int... values) {
        return 0;
    }
}
