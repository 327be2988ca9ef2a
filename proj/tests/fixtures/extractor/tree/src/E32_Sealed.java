package fx.sealed;

public sealed interface Expr permits Num, Add {
    int eval();
}

final class Num implements Expr {
    public int eval() {
        return 1;
    }
}

non-sealed class Add implements Expr {
    public int eval() {
        return 2;
    }
}
