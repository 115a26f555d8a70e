class OpCounter:
    """Tally of elementary steps, used to compare algorithms without timing noise."""

    __slots__ = ("count",)

    def __init__(self, count: int = 0):
        self.count = count

    def add(self, k: int = 1) -> None:
        self.count += k

    def __int__(self) -> int:
        return self.count

    def __repr__(self) -> str:
        return f"OpCounter({self.count})"
