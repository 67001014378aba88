"""Regenerate the bundled surname datasets under src/fourway/data/.

The three lists mimic the size and letter statistics of typical
English-language name lists: a small hand-picked list of famous
novelists' and poets' surnames (96), a mid-size roster (394), and a
large graduation-style roll (1369). The two larger lists mix common
real surnames with names sampled from an order-3 letter model trained
on the real ones, so letter statistics stay realistic without shipping
anyone's actual roster. Deterministic: fixed RNG seed.
"""

from __future__ import annotations

import random
from collections import defaultdict
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "fourway" / "data"

WRITERS = """
Joyce Fitzgerald Faulkner Nabokov Huxley Orwell Lawrence Steinbeck
Hemingway Woolf Kafka Proust Mann Camus Sartre Beckett Borges Marquez
Calvino Eco Greene Waugh Forster Conrad Wells Chesterton Kipling
Golding Salinger Vonnegut Heller Pynchon Roth Updike Bellow Malamud
Mailer Capote Baldwin Ellison Wright Morrison Walker Angelou Plath
Hughes Frost Eliot Pound Auden Yeats Stevens Cummings Williams
O'Connor Welty Cather Wharton Dreiser Lewis London Buck Mitchell Rand
Asimov Bradbury Clarke Herbert Tolkien Lovecraft Christie Chandler
Hammett Fleming Dick Atwood Munro Ondaatje Rushdie Naipaul Achebe
Soyinka Gordimer Coetzee Lessing Murdoch Spark Amis McEwan Barnes
Ishiguro Kerouac Ginsberg Burroughs Nin Miller
""".split()

COMMON_SURNAMES = """
Smith Johnson Williams Brown Jones Garcia Miller Davis Rodriguez
Martinez Hernandez Lopez Gonzalez Wilson Anderson Thomas Taylor Moore
Jackson Martin Lee Perez Thompson White Harris Sanchez Clark Ramirez
Lewis Robinson Walker Young Allen King Wright Scott Torres Nguyen
Hill Flores Green Adams Nelson Baker Hall Rivera Campbell Mitchell
Carter Roberts Gomez Phillips Evans Turner Diaz Parker Cruz Edwards
Collins Reyes Stewart Morris Morales Murphy Cook Rogers Gutierrez
Ortiz Morgan Cooper Peterson Bailey Reed Kelly Howard Ramos Kim Cox
Ward Richardson Watson Brooks Chavez Wood James Bennett Gray Mendoza
Ruiz Hughes Price Alvarez Castillo Sanders Patel Myers Long Ross
Foster Jimenez Powell Jenkins Perry Russell Sullivan Bell Coleman
Butler Henderson Barnes Gonzales Fisher Vasquez Simmons Romero Jordan
Patterson Alexander Hamilton Graham Reynolds Griffin Wallace Moreno
West Cole Hayes Bryant Herrera Gibson Ellis Tran Medina Aguilar
Stevens Murray Ford Castro Marshall Owens Harrison Fernandez McDonald
Woods Washington Kennedy Wells Vargas Henry Chen Freeman Webb Tucker
Guzman Burns Crawford Olson Simpson Porter Hunter Gordon Mendez
Silva Shaw Snyder Mason Dixon Munoz Hunt Hicks Holmes Palmer Wagner
Black Robertson Boyd Rose Stone Salazar Fox Warren Mills Meyer Rice
Schmidt Garza Daniels Ferguson Nichols Stephens Soto Weaver Ryan
Gardner Payne Grant Dunn Kelley Spencer Hawkins Arnold Pierce Vazquez
Hansen Peters Santos Hart Bradley Knight Elliott Cunningham Duncan
Armstrong Hudson Carroll Lane Riley Andrews Alvarado Ray Delgado
Berry Perkins Hoffman Johnston Matthews Pena Richards Contreras
Willis Carpenter Lawrence Sandoval Guerrero Cohen Estrada Ortega
Watkins Greene Nunez Wheeler Valdez Harper Burke Larson Santiago
Maldonado Morrison Franklin Carlson Austin Dominguez Carr Lawson
Jacobs Obrien Lynch Singh Vega Bishop Montgomery Oliver Jensen
Harvey Williamson Gilbert Dean Sims Espinoza Howell Li Wong Reid
Hanson Le Mccoy Garrett Burton Fuller Wang Weber Welch Rojas Lucas
Marquez Fields Park Yang Little Banks Padilla Day Walsh Bowman
Schultz Luna Fowler Mejia Davidson Acosta Brewer May Holland Juarez
Newman Pearson Curtis Cortez Douglas Schneider Joseph Barrett
Navarro Figueroa Keller Avila Wade Molina Stanley Hopkins Campos
Barnett Bates Chapman Baldwin Billings Blackwell Bowen Boone Bridges
""".split()

def train(corpus: list[str], order: int = 3) -> dict[str, list[tuple[str, int]]]:
    counts: dict[str, dict[str, int]] = defaultdict(lambda: defaultdict(int))
    for name in corpus:
        word = "^" * order + name.upper() + "$"
        for i in range(order, len(word)):
            counts[word[i - order : i]][word[i]] += 1
    return {ctx: sorted(nxt.items()) for ctx, nxt in counts.items()}


def sample_name(model, rng: random.Random, order: int = 3) -> str:
    out = "^" * order
    while True:
        choices = model.get(out[-order:])
        if not choices:
            return ""
        letters, weights = zip(*choices)
        c = rng.choices(letters, weights=weights)[0]
        if c == "$":
            return out[order:]
        out += c
        if len(out) > 11 + order:
            return ""


def generate_pool(model, rng: random.Random, want: int, taken: set[str]) -> list[str]:
    pool: list[str] = []
    while len(pool) < want:
        name = sample_name(model, rng)
        if len(name) < 4 or name in taken:
            continue
        taken.add(name)
        pool.append(name.capitalize())
    return pool


def main() -> None:
    rng = random.Random(7)
    corpus = COMMON_SURNAMES + WRITERS
    model = train(corpus)
    taken = {x.upper() for x in corpus}
    synthetic = generate_pool(model, rng, 2000 - len(corpus), taken)
    pool = corpus + synthetic

    representatives = rng.sample(pool, 394)
    graduates = rng.sample(pool, 1369)

    OUT.mkdir(parents=True, exist_ok=True)
    for name, entries in (
        ("writers", WRITERS),
        ("representatives", representatives),
        ("graduates", graduates),
    ):
        (OUT / f"{name}.txt").write_text("\n".join(entries) + "\n", "utf-8")
        print(name, len(entries))


if __name__ == "__main__":
    main()
