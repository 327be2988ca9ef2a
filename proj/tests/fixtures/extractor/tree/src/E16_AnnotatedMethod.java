package fx.annotated;

public class AnnotatedMethod extends Base {
    /**
     * Overridden.
     */
    @Override
    @SuppressWarnings({"unchecked", "rawtypes"})
    public String toString() {
        return "x";
    }

    /** Deprecated one. */
    @Deprecated(since = "9")
    protected void old() {}
}
