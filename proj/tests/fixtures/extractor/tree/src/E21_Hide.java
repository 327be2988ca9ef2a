package fx.hide;

public class Hide {
    /**
     * Internal.
     * @hide
     */
    public static void internal() {}

    /**
     * Only mentions {@hide} inline.
     */
    public void inline() {}

    /**
     * Hidden from javadoc, different tag.
     * @hidden
     */
    public void hidden() {}
}
