public class Account {
    private final String owner;
    private int balance;

    public Account(String owner, int balance) {
        this.owner = owner;
        this.balance = balance;
    }

    public int withdraw(int amount) {
        if (amount <= 0) {
            throw new IllegalArgumentException("amount must be positive");
        }
        if (amount > balance) {
            throw new IllegalStateException(owner + " has insufficient funds");
        }
        balance -= amount;
        return balance;
    }

    public static void main(String[] args) {
        Account account = new Account("ada", 50);
        int attempts = 0;
        do {
            try {
                account.withdraw(20);
            } catch (IllegalStateException e) {
                break;
            } finally {
                attempts++;
            }
        } while (attempts < 5);
        System.out.println(account.balance + " after " + attempts + " attempts");
    }
}
