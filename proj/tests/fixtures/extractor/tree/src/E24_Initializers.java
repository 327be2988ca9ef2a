package fx.init;

import java.util.HashMap;
import java.util.Map;

public class Initializers {
    private static final Map<String, Integer> TABLE = new HashMap<>();

    static {
        TABLE.put("a", 1);
    }

    {
        count = 2;
    }

    private int count;

    /** Count. */
    public int count() {
        return count;
    }
}
