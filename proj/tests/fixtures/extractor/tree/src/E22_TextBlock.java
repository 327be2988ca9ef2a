package fx.textblock;

public class TextBlock {
    /** Json. */
    public String json() {
        return """
            { "a": "}" }
            """;
    }

    public void next() {}
}
