"""Check matrices transcribed from the worked constructions, rows as 'x|z' bit strings."""

# 5x5 circulant S of the cyclic scheme C_5
S_5 = [
    "00001",
    "10000",
    "01000",
    "00100",
    "00010",
]

# C_5: B1 = A_1, B2 = A_2
B_C5 = [
    "01001|00110",
    "10100|00011",
    "01010|10001",
    "00101|11000",
    "10010|01100",
]

# C_6: B1 = A_2 + A_3, B2 = A_0 + A_1 + A_2
B_C6 = [
    "001110|111011",
    "000111|111101",
    "100011|111110",
    "110001|011111",
    "111000|101111",
    "011100|110111",
]

# C_7: B1 = A_1, B2 = A_2 + A_3
B_C7 = [
    "0100001|0011110",
    "1010000|0001111",
    "0101000|1000111",
    "0010100|1100011",
    "0001010|1110001",
    "0000101|1111000",
    "1000010|0111100",
]

# C_11: B1 = A_1 + A_4 + A_5, B2 = A_2 + A_5
B_C11 = [
    "01001111001|00100110010",
    "10100111100|00010011001",
    "01010011110|10001001100",
    "00101001111|01000100110",
    "10010100111|00100010011",
    "11001010011|10010001001",
    "11100101001|11001000100",
    "11110010100|01100100010",
    "01111001010|00110010001",
    "00111100101|10011001000",
    "10011110010|01001100100",
]

# C_13: B1 = A_1 + A_3 + A_4 + A_5, B2 = A_2 + A_3 + A_5
B_C13 = [
    "0101110011101|0011010010110",
    "1010111001110|0001101001011",
    "0101011100111|1000110100101",
    "1010101110011|1100011010010",
    "1101010111001|0110001101001",
    "1110101011100|1011000110100",
    "0111010101110|0101100011010",
    "0011101010111|0010110001101",
    "1001110101011|1001011000110",
    "1100111010101|0100101100011",
    "1110011101010|1010010110001",
    "0111001110101|1101001011000",
    "1011100111010|0110100101100",
]

# U_12: B1 = A_2, B2 = A_3 + A_5
B_U12 = [
    "000010001000|010001100110",
    "000001000100|001000110011",
    "000000100010|000110011001",
    "000000010001|100011001100",
    "100000001000|011001000110",
    "010000000100|001100100011",
    "001000000010|100100011001",
    "000100000001|110010001100",
    "100010000000|011001100100",
    "010001000000|001100110010",
    "001000100000|100110010001",
    "000100010000|110011001000",
]

# (scheme spec, b1 indices, b2 indices, drop_last, fixture, expected [[n, k, d]])
WORKED = [
    ("cyclic:5", (1,), (2,), 1, B_C5, (5, 1, 3)),
    ("cyclic:6", (2, 3), (0, 1, 2), 1, B_C6, (6, 1, 3)),
    ("cyclic:7", (1,), (2, 3), 1, B_C7, (7, 1, 3)),
    ("cyclic:11", (1, 4, 5), (2, 5), 1, B_C11, (11, 1, 5)),
    ("cyclic:13", (1, 3, 4, 5), (2, 3, 5), 1, B_C13, (13, 1, 5)),
    ("u6n:2", (2,), (3, 5), 4, B_U12, (12, 4, 3)),
]
