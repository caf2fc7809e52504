#!/usr/bin/env python3
# Copyright 2026 The summgauge Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the shipped toy corpus (data/toy_corpus.jsonl).

News-style topics built from templates with a fixed seed, so the file is
reproducible byte for byte. Each topic has 3 or 4 documents and 2
references; references reuse some document sentences and paraphrase
others.
"""

import argparse
import json
import random

EVENTS = [
    ("flood", "heavy rain", "the river burst its banks"),
    ("earthquake", "a magnitude 6 tremor", "buildings collapsed in the old town"),
    ("election", "a close vote", "the opposition conceded defeat"),
    ("strike", "a pay dispute", "trains stopped running across the region"),
    ("wildfire", "dry winds", "thousands of hectares of forest burned"),
    ("merger", "months of talks", "the two companies agreed to combine"),
    ("summit", "a regional crisis", "leaders signed a joint declaration"),
    ("outbreak", "contaminated water", "dozens of residents fell ill"),
    ("storm", "a tropical cyclone", "power lines were torn down"),
    ("protest", "a rise in fuel prices", "crowds gathered outside parliament"),
]

PLACES = ["Northbridge", "Port Alden", "Kestrel Valley", "Lower Marsh",
          "Granton", "Eastfield", "Silver Bay", "Harrow Hill", "Westmere",
          "Caldera Springs"]
OFFICIALS = ["Mayor Elena Ruiz", "Governor Tom Hadley", "Minister Ana Costa",
             "Commissioner Raj Patel", "Director Mei Lin", "Chief Sam Okafor",
             "Senator Ruth Bauer", "Inspector Karl Weiss"]
AGENCIES = ["the national weather service", "the interior ministry",
            "the regional health board", "the transport authority",
            "the civil protection agency", "the central bank"]
DAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday",
        "Sunday"]

LEADS = [
    "The {event} hit {place} on {day} after {cause}, and {impact}.",
    "{place} was struck by a {event} on {day}, officials said, after {cause}.",
    "On {day}, a {event} in {place} followed {cause}; {impact}.",
]
DETAILS = [
    "At least {n1} people were affected and {n2} were moved to shelters.",
    "{official} said the response had been fast but resources were stretched.",
    "According to {agency}, the damage could exceed {n3} million dollars.",
    "Schools in {place} remained closed while crews inspected roads and bridges.",
    "Residents described long queues for water and fuel in the days that followed.",
    "Volunteers from nearby towns arrived with food, blankets and medical supplies.",
    "{agency_cap} warned that conditions could worsen later in the week.",
    "Local businesses reported losses as customers stayed at home.",
    "Emergency teams worked through the night to restore basic services.",
    "{official} promised an independent review of how warnings were issued.",
]
BACKGROUND = [
    "{place} last faced a similar {event} {n4} years ago.",
    "Experts have long argued that {place} needs better planning for such events.",
    "The region has invested in new infrastructure, but critics say it is not enough.",
    "Insurance claims are expected to rise sharply over the coming months.",
]
CLOSERS = [
    "Officials expect recovery to take several months.",
    "A further update from {agency} is due on {day2}.",
    "The government said it would release emergency funds by the end of the month.",
]
PARAPHRASE = [
    "A {event} caused by {cause} affected {place} on {day}.",
    "Authorities in {place} responded to the {event} and opened shelters.",
    "{official} pledged a review, while {agency} estimated heavy costs.",
    "About {n1} people in {place} were affected by the {event}.",
    "Recovery in {place} is expected to be slow and costly.",
]


def fill(template, slots):
    text = template.format(**slots)
    return text[0].upper() + text[1:]


def make_topic(rng, index):
    event, cause, impact = EVENTS[index % len(EVENTS)]
    slots = {
        "event": event,
        "cause": cause,
        "impact": impact,
        "place": PLACES[(index * 3) % len(PLACES)],
        "day": rng.choice(DAYS),
        "day2": rng.choice(DAYS),
        "official": rng.choice(OFFICIALS),
        "agency": rng.choice(AGENCIES),
        "n1": rng.randrange(50, 5000),
        "n2": rng.randrange(10, 900),
        "n3": rng.randrange(2, 400),
        "n4": rng.randrange(5, 60),
    }
    slots["agency_cap"] = slots["agency"][0].upper() + slots["agency"][1:]
    documents = []
    doc_count = rng.choice([3, 4])
    for d in range(doc_count):
        sentences = [fill(LEADS[(index + d) % len(LEADS)], slots)]
        sentences += [fill(t, slots) for t in rng.sample(DETAILS, rng.randrange(3, 6))]
        sentences += [fill(t, slots) for t in rng.sample(BACKGROUND, rng.randrange(1, 3))]
        sentences.append(fill(rng.choice(CLOSERS), slots))
        documents.append(" ".join(sentences))
    references = []
    for r in range(2):
        lead = documents[r % doc_count].split(". ")[0].rstrip(".") + "."
        parts = [lead]
        parts += [fill(t, slots) for t in rng.sample(PARAPHRASE, 2)]
        references.append(" ".join(parts))
    return {
        "topic_id": "t%03d" % (index + 1),
        "documents": documents,
        "references": references,
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--topics", type=int, default=20)
    parser.add_argument("--seed", type=int, default=2026)
    parser.add_argument("--out", default="data/toy_corpus.jsonl")
    args = parser.parse_args()
    rng = random.Random(args.seed)
    with open(args.out, "w", encoding="utf-8", newline="\n") as out:
        for i in range(args.topics):
            topic = make_topic(rng, i)
            out.write(json.dumps(topic, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
