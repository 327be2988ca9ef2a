package fx.anon;

public class Anonymous {
    /** Starts a worker. */
    public void start() {
        Runnable r = new Runnable() {
            /** Not API. */
            @Override
            public void run() {
                System.out.println("{");
            }
        };
        r.run();
    }

    private final Object lock = new Object() {
        @Override
        public String toString() {
            return "lock";
        }
    };

    public void stop() {}
}
