package fx.arrays;

public class Arrays {
    public int[] a(int[] x, String s[]) {
        return x;
    }

    public int b()[] {
        return null;
    }

    byte[][] c(char[][] grid) {
        return null;
    }
}
