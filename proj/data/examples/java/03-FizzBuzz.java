public class FizzBuzz {
    static String label(int n) {
        switch (n % 15) {
            case 0:
                return "FizzBuzz";
            case 3:
            case 6:
            case 9:
            case 12:
                return "Fizz";
            case 5:
            case 10:
                return "Buzz";
            default:
                return Integer.toString(n);
        }
    }

    public static void main(String[] args) {
        StringBuilder out = new StringBuilder();
        for (int i = 1; i <= 15; i++) {
            out.append(label(i)).append('\n');
        }
        System.out.print(out);
    }
}
