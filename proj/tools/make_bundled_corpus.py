#!/usr/bin/env python3
"""Generates data/bundled_corpus.json, the small synthetic rice/chicken corpus.

Every item is placed into an exact number of a subcategory's recipes (or a
dish's recipes) so the resulting statistics are controlled; the choice of
which recipes receive an item is drawn from a fixed seed.

    python3 tools/make_bundled_corpus.py > data/bundled_corpus.json
"""

import json
import random
import sys

RECIPES_PER_DISH = 3
SEED = 20211

# item -> number of the subcategory's recipes that contain it
CORPUS = [
    ("rice", [
        ("biryani", "rb", {
            "salt": 12, "long-grain rice": 12,
            "kewra water": 12, "mace": 11, "curd": 10, "black peppercorn": 9,
            "ginger garlic paste": 8, "saffron": 7, "mint leaves": 6,
            "fried onion": 5,
            "ghee": 12, "cardamom": 12, "cinnamon": 11, "clove": 10,
            "bay leaf": 8, "onion": 6, "water": 6, "green chilli": 6,
            "oil": 3,
        }, [
            ("chicken biryani", {"chicken": 3}),
            ("mutton biryani", {"mutton": 3}),
            ("hyderabadi biryani", {"chicken": 2, "star anise": 2}),
            ("vegetable biryani", {"mixed vegetables": 3, "potato": 2}),
        ]),
        ("fried rice", "rf", {
            "salt": 12, "long-grain rice": 12,
            "dark soya sauce": 12, "garlic": 11, "cabbage": 10, "egg": 9,
            "carrot": 8, "spring onion": 7, "vinegar": 6, "black pepper": 5,
            "oil": 12, "onion": 6, "capsicum": 4, "green chilli": 3,
            "clove": 1, "cinnamon": 1,
        }, [
            ("egg fried rice", {"egg": 3}),
            ("schezwan fried rice", {"schezwan sauce": 3, "red chilli": 2}),
            ("vegetable fried rice", {"french beans": 3}),
            ("chicken fried rice", {"chicken": 3}),
        ]),
        ("pulao", "rp", {
            "salt": 12, "long-grain rice": 12,
            "cumin seed": 12, "almond": 11, "cashew nut": 10, "green pea": 9,
            "coconut": 8, "raisin": 6,
            "ghee": 9, "cardamom": 10, "cinnamon": 10, "clove": 10,
            "bay leaf": 9, "onion": 6, "water": 8, "green chilli": 5,
            "fried onion": 1,
        }, [
            ("peas pulao", {"green pea": 3}),
            ("tawa pulao", {"pav bhaji masala": 3, "capsicum": 2}),
            ("methi pulao", {"fenugreek leaves": 3}),
            ("kashmiri pulao", {"saffron": 2, "apple": 2}),
        ]),
    ]),
    ("chicken", [
        ("indian", "ci", {
            "salt": 12,
            "cumin": 10, "coriander powder": 9, "coriander": 8,
            "cilantro": 7, "turmeric": 6, "garam masala": 5, "tomato": 4,
            "chicken": 9, "chicken leg": 7, "chicken thigh": 6,
            "chicken boneless": 6, "chicken breast": 2,
            "ginger garlic paste": 5, "onion": 7, "oil": 4, "curd": 4,
            "water": 5, "green chilli": 6,
        }, [
            ("butter chicken", {"butter": 3, "cream": 2}),
            ("chicken curry", {"chicken": 2, "potato": 1}),
            ("chicken tikka masala", {"kasuri methi": 3}),
            ("tandoori chicken", {"lemon": 2, "chicken leg": 2}),
        ]),
        ("chinese", "cc", {
            "salt": 12,
            "dark soya sauce": 10, "corn starch": 9, "chicken broth": 8,
            "capsicum": 7, "garlic": 6, "spring onion": 6, "vinegar": 5,
            "chicken": 7, "chicken breast": 9, "chicken boneless": 6,
            "chicken thigh": 5,
            "oil": 5, "black pepper": 4, "ginger": 5, "onion": 3,
        }, [
            ("chilli chicken", {"green chilli": 3}),
            ("kung pao chicken", {"peanut": 3}),
            ("sweet and sour chicken", {"pineapple": 2}),
            ("chicken manchurian", {"chicken": 2}),
        ]),
    ]),
]


def spread(rng, pool, rows):
    """Assign each pooled item to exactly `count` of `rows` recipe slots."""
    for item, count in pool.items():
        for row in rng.sample(range(len(rows)), count):
            rows[row].append(item)


def build():
    rng = random.Random(SEED)
    categories = []
    for cat_name, subcats in CORPUS:
        subcategories = []
        for sub_name, prefix, pool, dishes in subcats:
            rows = [[] for _ in range(len(dishes) * RECIPES_PER_DISH)]
            spread(rng, pool, rows)
            dish_objs = []
            for d, (dish_name, dish_pool) in enumerate(dishes):
                mine = rows[d * RECIPES_PER_DISH:(d + 1) * RECIPES_PER_DISH]
                spread(rng, dish_pool, mine)
                recipes = []
                for r, items in enumerate(mine):
                    seen = []
                    for item in items:
                        if item not in seen:
                            seen.append(item)
                    rid = "%s%02d" % (prefix, d * RECIPES_PER_DISH + r + 1)
                    recipes.append({"id": rid, "items": seen})
                dish_objs.append({"name": dish_name, "recipes": recipes})
            subcategories.append({"name": sub_name, "dishes": dish_objs})
        categories.append({"name": cat_name, "subcategories": subcategories})
    return {"categories": categories}


if __name__ == "__main__":
    json.dump(build(), sys.stdout, indent=2)
    sys.stdout.write("\n")
