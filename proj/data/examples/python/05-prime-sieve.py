def primes_up_to(limit):
    if limit < 2:
        return []
    is_prime = [True] * (limit + 1)
    is_prime[0] = is_prime[1] = False
    p = 2
    while p * p <= limit:
        if is_prime[p]:
            for multiple in range(p * p, limit + 1, p):
                is_prime[multiple] = False
        p += 1
    return [n for n in range(limit + 1) if is_prime[n]]


def first_gap(primes, size):
    for left, right in zip(primes, primes[1:]):
        if right - left >= size:
            break
    else:
        return None
    return left, right


found = primes_up_to(50)
print(found, first_gap(found, 4))
