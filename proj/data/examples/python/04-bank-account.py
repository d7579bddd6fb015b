class InsufficientFunds(Exception):
    pass


class Account:
    def __init__(self, owner, balance=0):
        self.owner = owner
        self.balance = balance

    def deposit(self, amount):
        if amount <= 0:
            raise ValueError("amount must be positive")
        self.balance += amount
        return self.balance

    def withdraw(self, amount):
        if amount > self.balance:
            raise InsufficientFunds(self.owner)
        self.balance -= amount
        return self.balance


account = Account("ada", 50)
try:
    account.deposit(25)
    account.withdraw(100)
except InsufficientFunds as error:
    print("not enough money for", error)
finally:
    print("balance:", account.balance)
