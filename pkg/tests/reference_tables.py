"""Frozen expected remainder tables for the byte-exactness tests.

Keys are b (and residue r); values are canonical renderings.
"""

REMAINDERS_GAP3 = {
    3: '-3y',
    4: '2y',
    5: 'y^3 + y',
    6: '3y',
    7: '-y^4 - y^3',
    8: '2y^3 - y^2 + 1',
    9: 'y^5 + y^4 + y^3 + y^2 + y + 1',
    10: 'y^3 + 2y^2 + y',
    11: 'y^9 + y^8 + y^6 + y^5 + 2y^3 + 2y^2 + 2y + 2',
    12: 'y^2 + 2y + 1',
    13: '-y^10 - y^7 - y^4 + y + 1',
    14: '-y^4 + y^3 + 2',
    15: '-y^7 + y^5 - y^4 + 1',
    16: '-y^4 + y^2',
    18: 'y^5 - y^4 + y^3 - y^2 + y - 1',
    20: 'y^7 + 2y^6 - 2y^4 + y^3 + y^2 - y',
    21: '3y^11 - y^10 + 3y^8 - 2y^7 - y^6 + 2y^5 + y^4 - y^3 + 2y^2 + 2y - 2',
    22: 'y^9 + y^8 + y^6 + y^5',
    24: 'y^7 + y^6 + 2y^5 + y^4 - y - 1',
    26: '2y^11 - y^10 + 2y^9 + y^7 + 2y^5 - y^4 + 2y^3 + y - 1',
    28: '2y^11 + y^10 + y^7 + 2y^6 - y^4 + 2y^3 + 2y^2 - 1',
    30: 'y^7 + 4y^6 + 3y^5 + y^4 - 2y^2 - 2y + 1',
    36: 'y^11 + y^9 + 2y^8 + y^7 + 2y^6 + y^5 + y^3',
    42: 'y^11 + y^10 + 2y^9 + y^8 + y^6 + 2y^5 + y^4 + y^3',
}

FOLDED_REMAINDERS = {
    3: [
        '6y + 3',
        'y - 1',
        '-y - 2',
    ],
    5: [
        'y^3 - 3y^2 + 3y - 1',
        '2y^2 - 2',
        'y^3 + 2y^2 + y + 1',
        '-2y^3 - 2y - 1',
        '-y^2 - 2y - 2',
    ],
    6: [
        '1',
        '3y - 3',
        '-y',
        '-3',
        'y - 1',
        '-3y',
    ],
    7: [
        'y^3 - 3y^2 + 3y - 1',
        '-y^5 + y^2',
        '2y^5 + y^4 + 2y^3 + y^2 + 1',
        '-y^5 + y^3',
        '2y^5 - y^3 + y^2 - 2',
        '-2y^5 - 2y^3 + y^2 - y - 3',
        '-y^4 - y^3 - y^2 - 2y - 2',
    ],
    10: [
        'y^3 - 3y^2 + 3y - 1',
        '0',
        'y^3 + y - 1',
        '2y^3 - 2y^2 - 1',
        '-2y^3 + 3y^2 - 2y',
        'y^3 + y^2 - y - 1',
        '-2y',
        '-y^3 + 3y - 3',
        '-3',
        '-2y^3 + y^2 - 2y',
    ],
    14: [
        'y^3 - 3y^2 + 3y - 1',
        '-y^5 + y^2 - 2',
        '-y^4 + y^2 - 1',
        '-y^5 + 2y^4 - y^3 + 2y - 2',
        '2y^4 - y^3 + y^2 - 2y',
        '2y^5 - 2y^4 - y^2 + y - 1',
        '-2y^5 + 3y^4 - 3y^3 + 3y^2 - 2y',
        'y^3 + y^2 - y - 1',
        'y^5 - 2y^4 + 2y^3 - y^2 - 2',
        'y^4 - 2y^3 + y^2 - 2y + 1',
        'y^5 - 2y^4 + y^3 + 2y - 2',
        '2y^5 - 2y^4 + 3y^3 - 3y^2 + 2y - 2',
        '-y^2 - y - 1',
        '-2y^5 + y^4 - y^3 + y^2 - 2y',
    ],
    15: [
        'y^3 - 3y^2 + 3y - 1',
        'y^7 - y^5 + y^2 - 1',
        '-2y^6 + 2y^5 - 2y^4 + 2y^3 - 2y',
        'y^6 - y^5 + y^3',
        'y^7 - 3y^6 + 3y^5 + y^4 - 2y^3 + 2y^2 - y - 1',
        'y^7 - y^5 + y^4 - y^3 + y - 2',
        '-y^7 - y^6 + y^5 - 2y',
        'y^6 + y^3 - y^2 + 1',
        'y^7 + y^5 - 2y^3 + 2y^2 + y - 2',
        'y^7 - y^6 - y^5 + y^4 - 2y^3 + 2y^2 - 3',
        '-y^7 + y^5 - y^4 - y',
        'y^6 - 3y^5 + 3y^4 - y^2 + 2y - 2',
        'y^6 + y^5 - y^4 + y^2 - y - 1',
        '-y^7 + 2y^6 - 3y^5 + y^3 - 2y^2 + 2y - 4',
        '-2y^7 + y^6 + y^5 - 2y^4 + y^3 - y^2 - 2y + 1',
    ],
    21: [
        'y^3 - 3y^2 + 3y - 1',
        'y^7 - y^5 + y^2 - 1',
        'y^11 - y^8 + y^7 - y^6 + y^5 - y^4 + y^3 - 1',
        '-y^11 + y^10 - 2y^8 + y^7 - y^5 + y^4 - y - 1',
        '-2y^10 + 2y^9 - y^6 + y^5 - y^4 + y^2 - y',
        'y^10 - y^8 - y^7 + 2y^6 - y^4 + 2y^3 - y',
        'y^11 - 2y^10 + y^9 + y^6 + y^5 - y^4 - y^3 + 2y^2 - y - 1',
        'y^10 - 1',
        'y^11 - 2y^10 + y^9 - y^7 - y^5 + 2y^4 - y^3 - 2',
        '-2y^11 + y^9 - y^8 + y^6 - 2y^4 + y^2 - y - 1',
        '-y^11 + y^10 + y^9 - y^8 + y^6 - y^4 + y^3 - y + 1',
        'y^11 - y^9 + y^8 + y^7 - y^6 + y^5 + y^4 - 2y^3 + y^2 + y - 1',
        'y^11 + y^8 - y^6 + y^4 - 1',
        'y^11 - 2y^10 + y^9 + 2y^8 - 4y^7 + y^6 + y^5 - y^4 - y^3 + 2y^2 - 3',
        '-y^10 - y^3 - 1',
        '-y^11 + 2y^10 - y^9 - y^5 + y^4 + y^3 - y^2',
        'y^11 - y^9 - y^8 + 2y^7 - y^5 + 3y^4 - y^3 - y^2 + y - 1',
        '-y^11 + y^10 - y^9 + 3y^8 - y^7 - y^6 + y^5 - y^3 + 2y - 3',
        '2y^11 - y^10 - y^9 + 2y^8 - y^7 - y^6 + y^5 - y^3 + y^2 - 2',
        '-y^11 + 2y^10 - 3y^9 + y^7 - y^6 + y^3 - 3y^2 + y - 2',
        '-2y^11 + y^10 + y^9 - 2y^8 + y^7 + y^6 - 2y^5 - y^4 + 2y^3 - y^2 - 2y + 1',
    ],
    30: [
        'y^3 - 3y^2 + 3y - 1',
        'y^7 - y^5 + y^2 - 1',
        '2y^7 - 2y^4',
        '2y^7 - y^6 - y^5 - y^3 + 2y - 2',
        '-y^7 - y^6 + y^5 + y^4 - y - 1',
        '-y^7 + 2y^6 - y^5 - y^4 - y^3 + 2y^2 - y',
        '-y^7 - y^6 + y^5 + 2y^2 - 2',
        '-4y^7 - y^6 + 2y^5 + 2y^4 + 3y^3 + y^2 - 5',
        'y^7 + 2y^6 - y^5 - 2y^2 - y + 2',
        '3y^7 + y^6 + y^5 - 3y^4 - 2y^3 - 2y^2 + 2y + 1',
        '-y^7 + y^5 + y^4 - y - 2',
        '4y^7 + y^6 - 3y^5 - y^4 - 2y^3 - 3y^2 + 2y + 2',
        '-y^6 - y^5 + y^4 + y^2 - y - 1',
        '-y^7 + y^5 - y^3',
        '-4y^7 - 3y^6 + y^5 + 4y^4 + 3y^3 + 3y^2 - 7',
        'y^3 + y^2 - y - 1',
        'y^7 + y^5 - 2y^4 + 2y^3 - y^2 - 1',
        '-2y^7 + 2y^5 + 2y^4 - 2y - 2',
        '2y^7 + y^6 - y^5 - 2y^4 - y^3',
        '3y^7 + 3y^6 - 3y^5 - 3y^4 - 2y^3 - 2y^2 + y + 3',
        'y^7 - y^5 - y^4 - y^3 + y',
        '-5y^7 - y^6 + y^5 + 4y^4 + 2y^3 + 2y^2 - 2y - 4',
        '4y^7 + y^6 - 2y^5 - 2y^4 - 3y^3 - y^2 + 4y + 1',
        '-y^7 - 2y^6 + 3y^5 + 2y^3 + y - 4',
        '-y^7 + y^6 + y^5 + y^4 - 2y - 1',
        'y^7 - 2y^6 + y^5 + y^4 - y - 2',
        'y^6 + y^5 - y^4 - 2y^3 - y^2',
        'y^6 - y^5 - y^4 - y^2 - y + 1',
        '-3y^7 - y^5 + 2y^4 + y^3 + 2y^2 - 2y - 2',
        '-y^6 - y^5 + y^3 + y^2 - 1',
    ],
    42: [
        'y^3 - 3y^2 + 3y - 1',
        'y^7 - y^5 + y^2 - 1',
        'y^11 - y^8 + y^7 - y^6 + y^5 - y^4 + y^3 - 1',
        '-y^11 + y^10 + y^7 - y^5 + y^4 - y - 1',
        '2y^9 - 2y^7 - y^6 + y^5 + y^4 - y^2 - y',
        '2y^11 - y^10 - y^8 - y^7 + 2y^6 - y^4 - 2y^2 + y',
        '-y^11 + y^9 - y^6 - y^5 + y^4 + y^3 - y - 1',
        '-y^10 - 2y^9 + 2y^8 + 2y^2 - 2y - 1',
        '-y^11 + y^9 - y^7 + y^5 - y^3',
        '-4y^11 + y^9 + 3y^8 - y^6 - 2y^5 + 2y^4 + 2y^3 + y^2 - y - 3',
        '3y^11 - y^10 - y^9 - y^8 + y^6 - y^4 - y^3 + 3y - 1',
        '-3y^11 - 2y^10 + y^9 + 3y^8 + 3y^7 - 3y^6 - y^5 + y^4 + 4y^3 + y^2 - y - 5',
        'y^11 + 2y^10 - y^8 - 2y^7 + y^6 + 2y^5 - y^4 - 2y^3 + 1',
        '3y^11 + 2y^10 - y^9 - 4y^8 + y^6 + 3y^5 - y^4 - 3y^3 - 2y^2 + 2y + 1',
        'y^10 - y^3 - 1',
        'y^11 - 2y^10 + y^9 - y^5 + y^4 + y^3 - y^2 - 2',
        'y^11 + 2y^10 - y^9 - 3y^8 + 2y^6 + y^5 - y^4 - 3y^3 - y^2 + y + 1',
        'y^11 + y^10 - y^9 - y^8 - y^7 + y^6 + y^5 - 2y^4 - y^3 + 1',
        'y^10 - y^9 - y^7 + y^6 - y^5 - y^3 + y^2',
        '-y^11 + y^9 - y^7 - y^6 + 2y^4 + y^3 - y^2 - y',
        '-4y^11 - 3y^10 + y^9 + 4y^8 + 3y^7 - y^6 - 4y^5 + y^4 + 4y^3 + 3y^2 - 7',
        'y^3 + y^2 - y - 1',
        'y^7 + y^5 - 2y^4 + 2y^3 - y^2 - 1',
        'y^11 + y^8 - y^7 - y^6 + y^5 + y^4 - y^3 - 1',
        'y^11 - y^10 + y^7 + y^5 - y^4 - y - 1',
        '-2y^11 - 2y^10 + 2y^9 + 2y^8 + 2y^7 - y^6 - 3y^5 + y^4 + 2y^3 + y^2 - y - 4',
        '2y^11 + y^10 - 2y^9 - y^8 + y^7 - y^4 - 2y^3 + y',
        '3y^11 + 2y^10 - y^9 - 2y^8 - 4y^7 + y^6 + 3y^5 - y^4 - 3y^3 - 2y^2 + y + 3',
        '-y^10 - 1',
        '-y^11 + 2y^10 - y^9 - y^7 - y^5 + 2y^4 - y^3',
        '-2y^11 - 2y^10 + y^9 + y^8 + 2y^7 - y^6 - 2y^5 + 2y^4 + 2y^3 + y^2 - y - 3',
        '-3y^11 + y^10 + y^9 + y^8 - y^6 + y^4 + y^3 + y - 3',
        '3y^11 + 2y^10 - y^9 - 3y^8 - 3y^7 + 3y^6 + 3y^5 - y^4 - 2y^3 - 3y^2 + y + 3',
        '-y^11 - 2y^10 + 2y^9 + y^8 + 2y^7 - y^6 - y^4 + 2y^3 - 3',
        '-y^11 + y^9 + 2y^8 - y^6 - y^5 + y^4 + y^3 - 2y - 1',
        'y^10 + 2y^9 - 2y^8 - y^3 - 1',
        'y^11 - y^9 + y^5 - y^4 - y^3 + y^2 - 2',
        '3y^11 - y^9 - y^8 - 2y^7 + 2y^6 + y^5 - 3y^4 - y^3 - y^2 + y + 1',
        '-y^11 - y^10 + y^9 + y^8 - y^7 - y^6 - y^5 + 2y^4 + y^3 - 2y - 1',
        '2y^11 + y^10 - 3y^9 - 2y^8 + y^7 + y^6 + y^5 - 2y^4 - 3y^3 + y^2 + 2y',
        '-3y^11 - y^9 + 2y^8 + y^7 - y^6 - 2y^5 + 2y^4 + y^3 + 3y^2 - y - 4',
        '-y^10 - y^9 + y^7 + y^6 - y^4 + y^2 - 1',
    ],
}
