#!/usr/bin/env python3
"""Generates the default 135-part whole-body topology manifest.

Writes data/wholebody135.json and include/wbpose/default_manifest.hpp (the same
document embedded as a raw string literal). Run from the repository root.
"""
import json
import math
import pathlib

BODY25 = [
    ("nose", "center"), ("neck", "center"),
    ("r_shoulder", "right"), ("r_elbow", "right"), ("r_wrist", "right"),
    ("l_shoulder", "left"), ("l_elbow", "left"), ("l_wrist", "left"),
    ("mid_hip", "center"),
    ("r_hip", "right"), ("r_knee", "right"), ("r_ankle", "right"),
    ("l_hip", "left"), ("l_knee", "left"), ("l_ankle", "left"),
    ("r_eye", "right"), ("l_eye", "left"), ("r_ear", "right"), ("l_ear", "left"),
    ("l_big_toe", "left"), ("l_small_toe", "left"), ("l_heel", "left"),
    ("r_big_toe", "right"), ("r_small_toe", "right"), ("r_heel", "right"),
]
BODY25_XY = [
    (0.0, -0.420), (0.0, -0.330),
    (-0.100, -0.330), (-0.140, -0.180), (-0.160, -0.040),
    (0.100, -0.330), (0.140, -0.180), (0.160, -0.040),
    (0.0, 0.0),
    (-0.060, 0.0), (-0.070, 0.220), (-0.070, 0.440),
    (0.060, 0.0), (0.070, 0.220), (0.070, 0.440),
    (-0.020, -0.458), (0.020, -0.458), (-0.046, -0.436), (0.046, -0.436),
    (0.100, 0.490), (0.122, 0.482), (0.064, 0.472),
    (-0.100, 0.490), (-0.122, 0.482), (-0.064, 0.472),
]
BODY25_LIMBS = [
    (1, 8), (1, 2), (1, 5), (2, 3), (3, 4), (5, 6), (6, 7), (8, 9), (9, 10),
    (10, 11), (8, 12), (12, 13), (13, 14), (1, 0), (0, 15), (15, 17), (0, 16),
    (16, 18), (2, 17), (5, 18), (14, 19), (19, 20), (14, 21), (11, 22),
    (22, 23), (11, 24),
]
FOOT_IDS = {19, 20, 21, 22, 23, 24}
R_ANKLE, L_ANKLE, R_WRIST, L_WRIST, R_EYE, L_EYE = 11, 14, 4, 7, 15, 16

# COCO per-keypoint sigmas; kappa = 2 * sigma.
COCO_SIGMA = {
    "nose": .026, "r_eye": .025, "l_eye": .025, "r_ear": .035, "l_ear": .035,
    "r_shoulder": .079, "l_shoulder": .079, "r_elbow": .072, "l_elbow": .072,
    "r_wrist": .062, "l_wrist": .062, "r_hip": .107, "l_hip": .107,
    "r_knee": .087, "l_knee": .087, "r_ankle": .089, "l_ankle": .089,
    "neck": .079, "mid_hip": .107,
}
FOOT_SIGMA = .089
FACE_KAPPA = .025
HAND_KAPPA = .035


def face_landmarks():
    pts = []
    for i in range(17):  # jaw contour
        t = math.pi * i / 16.0
        pts.append((-0.047 * math.cos(t), -0.452 + 0.074 * math.sin(t)))
    for i in range(5):  # right brow
        pts.append((-0.040 + 0.0075 * i, -0.466 - 0.004 * math.sin(math.pi * i / 4)))
    for i in range(5):  # left brow
        pts.append((0.010 + 0.0075 * i, -0.466 - 0.004 * math.sin(math.pi * i / 4)))
    for i in range(4):  # nose bridge
        pts.append((0.0, -0.447 + 0.0075 * i))
    for i in range(5):  # nostrils
        pts.append((-0.012 + 0.006 * i, -0.414 + 0.002 * abs(i - 2)))
    for cx in (-0.021, 0.021):  # eye rings
        for i in range(6):
            t = math.pi + 2 * math.pi * i / 6.0
            pts.append((cx + 0.009 * math.cos(t), -0.449 + 0.0035 * math.sin(t)))
    for i in range(12):  # outer lip
        t = math.pi + 2 * math.pi * i / 12.0
        pts.append((0.019 * math.cos(t), -0.398 + 0.008 * math.sin(t)))
    for i in range(8):  # inner lip
        t = math.pi + 2 * math.pi * i / 8.0
        pts.append((0.011 * math.cos(t), -0.398 + 0.0035 * math.sin(t)))
    pts.append((-0.021, -0.4475))  # right pupil
    pts.append((0.021, -0.4475))   # left pupil
    assert len(pts) == 70
    return pts


def hand_landmarks(wrist, sign):
    """20 finger joints (thumb..pinky, 4 each) hanging below the wrist."""
    angles = [-40.0, -15.0, 0.0, 12.0, 24.0]
    reach = [
        [0.020, 0.034, 0.048, 0.060],
        [0.040, 0.054, 0.066, 0.076],
        [0.041, 0.056, 0.069, 0.080],
        [0.040, 0.054, 0.066, 0.075],
        [0.037, 0.049, 0.058, 0.066],
    ]
    pts = []
    for f in range(5):
        a = math.radians(90.0 + sign * angles[f])
        for j in range(4):
            r = reach[f][j]
            pts.append((wrist[0] + r * math.cos(a), wrist[1] + r * math.sin(a)))
    return pts


def prim_tree(root_xy, pts, ids):
    """Minimum spanning tree over ids rooted at the anchor; returns (parent, child) edges."""
    in_tree = {"root": root_xy}
    edges = []
    remaining = list(ids)
    while remaining:
        best = None
        for pid in remaining:
            for tid, txy in in_tree.items():
                d = math.dist(txy, pts[pid])
                key = (d, pid, -1 if tid == "root" else tid)
                if best is None or key < best[0]:
                    best = (key, tid, pid)
        _, tid, pid = best
        edges.append((tid, pid))
        in_tree[pid] = pts[pid]
        remaining.remove(pid)
    return edges


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    parts, xy, kappa = [], [], {}
    for i, (name, side) in enumerate(BODY25):
        group = "foot" if i in FOOT_IDS else "body"
        parts.append({"id": i, "name": name, "group": group, "side": side})
        xy.append(BODY25_XY[i])
        kappa[i] = 2 * (FOOT_SIGMA if group == "foot" else COCO_SIGMA[name])

    face = face_landmarks()
    face_base = len(parts)
    for i, p in enumerate(face):
        side = "center" if abs(p[0]) < 1e-12 else ("right" if p[0] < 0 else "left")
        parts.append({"id": face_base + i, "name": f"face_{i}", "group": "face", "side": side})
        xy.append(p)
        kappa[face_base + i] = FACE_KAPPA

    fingers = ["thumb", "index", "middle", "ring", "pinky"]
    hand_bases = {}
    for prefix, side, wrist, sign in (("r", "right", R_WRIST, -1.0), ("l", "left", L_WRIST, 1.0)):
        base = len(parts)
        hand_bases[prefix] = base
        for k, p in enumerate(hand_landmarks(BODY25_XY[wrist], sign)):
            name = f"{prefix}_hand_{fingers[k // 4]}{k % 4 + 1}"
            parts.append({"id": base + k, "name": name, "group": "hand", "side": side})
            xy.append(p)
            kappa[base + k] = HAND_KAPPA
    assert len(parts) == 135

    limbs = list(BODY25_LIMBS)
    right_face = [face_base + i for i, p in enumerate(face) if p[0] <= 0.0]
    left_face = [face_base + i for i, p in enumerate(face) if p[0] > 0.0]
    for anchor, ids in ((R_EYE, right_face), (L_EYE, left_face)):
        for parent, child in prim_tree(xy[anchor], xy, ids):
            limbs.append((anchor if parent == "root" else parent, child))
    for prefix, wrist in (("r", R_WRIST), ("l", L_WRIST)):
        base = hand_bases[prefix]
        for f in range(5):
            chain = [wrist] + [base + 4 * f + j for j in range(4)]
            limbs.extend(zip(chain[:-1], chain[1:]))
    assert len(limbs) == 136
    for s, d in limbs:
        assert math.dist(xy[s], xy[d]) > 0.004, (s, d)

    doc = {
        "manifest_version": 1,
        "name": "wholebody135",
        "background_channel": True,
        "parts": parts,
        "limbs": [{"id": i, "src": s, "dst": d} for i, (s, d) in enumerate(limbs)],
        "anchors": [
            {"part": R_ANKLE, "groups": ["body", "foot"]},
            {"part": L_ANKLE, "groups": ["body", "foot"]},
            {"part": R_WRIST, "groups": ["body", "hand"]},
            {"part": L_WRIST, "groups": ["body", "hand"]},
            {"part": R_EYE, "groups": ["body", "face"]},
            {"part": L_EYE, "groups": ["body", "face"]},
        ],
        "oks_kappa": {str(k): round(v, 6) for k, v in kappa.items()},
        "template": {str(i): [round(p[0], 6), round(p[1], 6)] for i, p in enumerate(xy)},
    }
    text = json.dumps(doc, indent=1)
    (root / "data" / "wholebody135.json").write_text(text + "\n")
    header = (
        "// Generated by tools/gen_default_manifest.py; do not edit.\n"
        "#pragma once\n\n"
        "namespace wbpose::detail {\n\n"
        "inline constexpr const char* kDefaultManifestJson = R\"WBMANIFEST(\n"
        + text
        + "\n)WBMANIFEST\";\n\n}  // namespace wbpose::detail\n"
    )
    (root / "include" / "wbpose" / "default_manifest.hpp").write_text(header)


if __name__ == "__main__":
    main()
