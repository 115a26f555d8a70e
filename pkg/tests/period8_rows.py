"""Period-8 reference rows: (members of B(8,4) in one class, listed representatives, add, periodic witness)."""

ROWS = [
    (["00100011", "10010001", "00110010"], ["00100011", "10010001", "00110010"], 0, "00100011"),
    (["10011000", "00100110", "10001001"], ["10011000", "00100110", "10001001"], 0, "10011000"),
    (["01100111", "11011001", "01110110"], ["01100111", "11011001", "01110110"], 0, "01100111"),
    # the printed representative column repeats the previous row here; the B column is used instead
    (["11011100", "01101110", "11001101"], ["11011100", "01101110", "11001101"], 0, "11011100"),
    (["11110000", "00001111"], ["11110000", "00001111"], 0, "11110000"),
    (["10110100", "01001011"], ["10110100", "01001011"], 0, "10110100"),
    (["00001101"], ["00001101"], 0, "00001101"),
    (["00001011"], ["00001011"], 0, "00001011"),
    (["11110100"], ["11110100"], 0, "11110100"),
    # printed as a second copy of the row above
    (["11110010"], ["11110010"], 0, "11110010"),
    (["01010000", "00001010"], ["00001010"], 1, "00001010"),
    (["10101111", "11110101"], ["11110101"], 1, "11110101"),
    (["00001110"], ["00001110"], 1, "00001110"),
    (["11110001"], ["11110001"], 1, "11110001"),
    (["10101100"], ["10101100"], 1, "10101100"),
    (["01010011"], ["01010011"], 1, "01010011"),
    (["11011000"], ["11011000"], 1, "11011000"),
    (["00100111"], ["00100111"], 1, "00100111"),
    (["00001001", "10010000"], ["10010000"], 2, "10010000"),
    (["01000101", "01010001"], ["01010001"], 2, "01010001"),
    (["10111010", "10101110"], ["10101110"], 2, "10101110"),
    (["11110110", "01101111"], ["01101111"], 2, "01101111"),
    (["00001100"], ["00001100"], 2, "00001100"),
    (["11110011"], ["11110011"], 2, "11110011"),
    (["00010000", "00001000"], ["00001000"], 3, "00001000"),
    (["01010010", "01001010"], ["01001010"], 3, "01001010"),
    (["10101101", "10110101"], ["10110101"], 3, "10110101"),
    (["11101111", "11110111"], ["11110111"], 3, "11110111"),
]
