def binary_search(items, target):
    low = 0
    high = len(items) - 1
    while low <= high:
        mid = (low + high) // 2
        if items[mid] == target:
            return mid
        elif items[mid] < target:
            low = mid + 1
        else:
            high = mid - 1
    return -1


numbers = [1, 3, 5, 7, 9, 11]
index = binary_search(numbers, 7)
print("found at", index)
