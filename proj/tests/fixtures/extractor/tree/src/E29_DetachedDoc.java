package fx.detached;

public class DetachedDoc {
    /** Detached by the comment below. */
    // TODO: remove
    public void detached() {}

    /** */
    public void blankDoc() {}

    /**/
    public void emptyBlock() {}

    /** Field doc. */
    private int field;

    public void afterField() {}

    /** Real doc. */
    public void documented() {}
}
