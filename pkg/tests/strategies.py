from hypothesis import strategies as st


def words(k: int, max_size: int = 24, min_size: int = 0):
    return st.lists(st.integers(0, k - 1), min_size=min_size, max_size=max_size).map(tuple)
