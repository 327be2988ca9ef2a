package fx.lambda;

import java.util.function.Function;

public class Lambda {
    private final Function<String, Integer> parse = s -> {
        return Integer.parseInt(s);
    };

    /** Applies a function. */
    public int apply(String s) {
        Function<String, Integer> f = x -> {
            int y = x.length();
            return y;
        };
        return f.apply(s);
    }
}
