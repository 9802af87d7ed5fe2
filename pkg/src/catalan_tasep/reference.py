"""Reference q-specialisations of the alpha/beta Narayana polynomials, n = 6, 7, 8.

``QQ[n][k]`` is ``N_{n-k,k}(q, q) / q^n`` and ``Q1[n][k]`` the filling part
of ``N_{n-k,k}(q, 1)``, both transcribed verbatim.
"""

import re

QQ = {
    6: {
        1: "2q^5 + 3q^4 + 4q^3 + 5q^2 + 6q + 1",
        2: "20q^5 + 30q^4 + 28q^3 + 20q^2 + 6q + 1",
        3: "40q^5 + 60q^4 + 48q^3 + 20q^2 + 6q + 1",
        4: "20q^5 + 30q^4 + 28q^3 + 20q^2 + 6q + 1",
        5: "2q^5 + 3q^4 + 4q^3 + 5q^2 + 6q + 1",
    },
    7: {
        1: "2q^6 + 3q^5 + 4q^4 + 5q^3 + 6q^2 + 7q + 1",
        2: "30q^6 + 45q^5 +46q^4 + 40q^3 + 27q^2 + 7q + 1",
        3: "100q^6 + 150q^5 + 130q^4 + 75q^3+ 27q^2 + 7q + 1",
        4: "100q^6 + 150q^5 + 130q^4 + 75q^3 + 27q^2 + 7q+ 1",
        5: "30q^6 + 45q^5 + 46q^4 + 40q^3 + 27q^2 + 7q + 1",
        6: "2q^6 + 3q^5+ 4q^4 + 5q^3 + 6q^2 + 7q + 1",
    },
    8: {
        1: "2q^7 + 3q^6 + 4q^5 + 5q^4 + 6q^3 + 7q^2 + 8q + 1",
        2: "42q^7 +63q^6 + 68q^5 + 65q^4 + 54q^3 + 35q^2 + 8q + 1",
        3: "210q^7 + 315q^6+ 292q^5 + 205q^4 + 110q^3 + 35q^2 + 8q + 1",
        4: "350q^7 + 525q^6 +460q^5 + 275q^4 + 110q^3 + 35q^2 + 8q + 1",
        5: "210q^7 + 315q^6 +292q^5 + 205q^4 + 110q^3 + 35q^2 + 8q + 1",
        6: "42q^7 + 63q^6 + 68q^5+ 65q^4 + 54q^3 + 35q^2 + 8q + 1",
        7: "2q^7 + 3q^6 + 4q^5 + 5q^4 +6q^3 + 7q^2 + 8q + 1",
    },
}

Q1 = {
    6: {
        1: "q^5 + 2q^4 + 3q^3 + 4q^2 + 5q + 6",
        2: "15q^4 + 24q^3 + 27q^2 + 24q + 15",
        3: "50q^3 + 60q^2 + 45q + 20",
        4: "50q^2 + 40q + 15",
        5: "15q + 6",
    },
    7: {
        1: "q^6 + 2q^5 + 3q^4 + 4q^3 + 5q^2 + 6q + 7",
        2: "21q^5 + 35q^4 + 42q^3 + 42q^2 + 35q + 21",
        3: "105q^4 + 140q^3 + 126q^2 + 84q + 35",
        4: "175q^3 + 175q^2 + 105q + 35",
        5: "105q^2 + 70q + 21",
        6: "21q + 7",
    },
    8: {
        1: "q^7 + 2q^6 + 3q^5 + 4q^4 + 5q^3 + 6q^2 + 7q + 8",
        2: "28q^6 + 48q^5 + 60q^4 + 64q^3 + 60q^2 + 48q + 28",
        3: "196q^5 + 280q^4 + 280q^3 + 224q^2 + 140q + 56",
        4: "490q^4 + 560q^3 + 420q^2 + 224q + 70",
        5: "490q^3 + 420q^2 + 210q + 56",
        6: "196q^2 + 112q + 28",
        7: "28q + 8",
    },
}


def canonical(text: str) -> str:
    """Normalise the irregular spacing of the transcription to ``a + b`` form."""
    return re.sub(r"\s*([+-])\s*", r" \1 ", text.strip())
