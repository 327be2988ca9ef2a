package fx.enums;

public enum Planet {
    MERCURY(3.3e23) {
        @Override
        public String label() {
            return "hot";
        }
    },
    EARTH(5.9e24);

    private final double mass;

    Planet(double mass) {
        this.mass = mass;
    }

    /** Label. */
    public String label() {
        return name();
    }

    public double mass() {
        return mass;
    }
}
