import random

from thompsonf.words import Letter, Word, reduce_to_normal_form


def random_word(rng: random.Random, max_len=30, max_index=8) -> Word:
    n = rng.randint(0, max_len)
    return Word(
        tuple(Letter(rng.randint(0, max_index), rng.choice((1, -1))) for _ in range(n))
    )


def random_normal_form(rng: random.Random, max_len=30, max_index=8):
    return reduce_to_normal_form(random_word(rng, max_len, max_index))
