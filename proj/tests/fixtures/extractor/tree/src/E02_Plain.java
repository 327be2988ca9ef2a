package fx.plain;

public class Plain {
    /**
     * Documented.
     */
    public int documented() {
        return 1;
    }

    int undocumented() {
        return 2;
    }
}
