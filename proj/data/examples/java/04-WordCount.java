import java.util.HashMap;
import java.util.Map;

public class WordCount {
    static Map<String, Integer> count(String[] lines) {
        Map<String, Integer> counts = new HashMap<>();
        for (String line : lines) {
            for (String word : line.toLowerCase().split("\\s+")) {
                if (word.isEmpty()) {
                    continue;
                }
                counts.merge(word, 1, Integer::sum);
            }
        }
        return counts;
    }

    public static void main(String[] args) {
        String[] text = {"the quick brown fox", "jumps over the lazy dog"};
        Map<String, Integer> counts = count(text);
        try {
            int total = 0;
            for (int value : counts.values()) {
                total += value;
            }
            System.out.println(total + " words");
        } catch (RuntimeException e) {
            System.err.println(e.getMessage());
        }
    }
}
