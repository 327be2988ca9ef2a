package fx.crlf;

public class Crlf {
    /**
     * Windows line endings.
     */
    public void crlf() {
        int a = 1;
    }
}
