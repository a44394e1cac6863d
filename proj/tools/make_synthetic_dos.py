# Copyright 2026 The idsbench Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes a synthetic NetFlow file in the CIDDS-001 layout.

Normal flows and DoS flows overlap in every feature, so no classifier
separates them perfectly. The output is deterministic for a given seed.

    python3 tools/make_synthetic_dos.py --rows 2000 --out tests/data/synthetic_dos.csv
"""

import argparse
import csv
import datetime

import numpy as np

HEADER = [
    "Date first seen", "Duration", "Proto", "Src IP Addr", "Src Pt",
    "Dst IP Addr", "Dst Pt", "Packets", "Bytes", "Flows", "Flags", "Tos",
    "class", "attackType", "attackID", "attackDescription",
]


def format_bytes(n):
    if n >= 1_000_000:
        return f"{n / 1_000_000:.1f} M"
    return str(n)


def make_row(rng, start, attack):
    seen = start + datetime.timedelta(seconds=float(rng.uniform(0, 86400)))
    if attack:
        duration = rng.exponential(0.05)
        proto = rng.choice(["TCP", "UDP", "ICMP"], p=[0.7, 0.2, 0.1])
        packets = int(rng.integers(1, 6))
        flags = rng.choice([".....S.", "....PA.", ".A....."], p=[0.6, 0.2, 0.2])
        dst_port = int(rng.choice([80, 443, 8080]))
        subnet = 220 if rng.uniform() < 0.7 else 100
        src_ip = f"192.168.{subnet}.{rng.integers(2, 40)}"
    else:
        duration = rng.exponential(1.5)
        proto = rng.choice(["TCP", "UDP", "ICMP"], p=[0.6, 0.35, 0.05])
        packets = int(rng.integers(1, 60))
        flags = rng.choice([".AP.S.", ".A....", "....PA.", ".....S."],
                           p=[0.4, 0.3, 0.2, 0.1])
        dst_port = int(rng.choice([80, 443, 53, 22, 8080, 25]))
        subnet = 220 if rng.uniform() < 0.05 else 100
        src_ip = f"192.168.{subnet}.{rng.integers(2, 40)}"
    bytes_ = int(packets * rng.integers(40, 1500))
    return [
        seen.strftime("%Y-%m-%d %H:%M:%S.%f")[:-3],
        f"{duration:.3f}",
        proto,
        src_ip,
        int(rng.integers(1024, 65535)),
        f"192.168.100.{rng.integers(2, 12)}",
        dst_port,
        packets,
        format_bytes(bytes_),
        1,
        flags,
        int(rng.choice([0, 0, 0, 32])),
        "attacker" if attack else "normal",
        "dos" if attack else "---",
        int(rng.integers(1, 20)) if attack else "---",
        "---",
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rows", type=int, default=2000)
    parser.add_argument("--attack-fraction", type=float, default=0.4)
    parser.add_argument("--seed", type=int, default=20260401)
    parser.add_argument("--out", required=True)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    start = datetime.datetime(2017, 3, 15)
    n_attack = int(round(args.rows * args.attack_fraction))
    labels = np.array([True] * n_attack + [False] * (args.rows - n_attack))
    rng.shuffle(labels)
    with open(args.out, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(HEADER)
        for attack in labels:
            writer.writerow(make_row(rng, start, bool(attack)))


if __name__ == "__main__":
    main()
