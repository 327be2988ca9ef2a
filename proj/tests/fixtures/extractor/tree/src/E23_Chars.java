package fx.chars;

public class Chars {
    public char open() {
        return '{';
    }

    public char close() {
        return '}';
    }

    public char quote() {
        return '\'';
    }

    public char backslash() {
        return '\\';
    }
}
