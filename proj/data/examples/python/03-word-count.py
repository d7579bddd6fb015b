import sys


def count_words(lines):
    counts = {}
    for line in lines:
        for word in line.lower().split():
            word = word.strip(".,;:!?")
            if not word:
                continue
            counts[word] = counts.get(word, 0) + 1
    return counts


def top_words(counts, limit=3):
    ranked = sorted(counts.items(), key=lambda pair: pair[1], reverse=True)
    return [word for word, _ in ranked[:limit]]


text = ["The quick brown fox", "jumps over the lazy dog", "The end."]
counts = count_words(text)
for word in top_words(counts):
    sys.stdout.write(word + "\n")
