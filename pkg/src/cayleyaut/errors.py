class CapacityError(RuntimeError):
    """A computation was refused because an input exceeded a configured bound."""

    def __init__(self, what: str, value: int, bound: int):
        super().__init__(f"{what} = {value} exceeds bound {bound}")
        self.what = what
        self.value = value
        self.bound = bound
