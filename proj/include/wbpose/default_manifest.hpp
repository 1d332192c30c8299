// Generated by tools/gen_default_manifest.py; do not edit.
#pragma once

namespace wbpose::detail {

inline constexpr const char* kDefaultManifestJson = R"WBMANIFEST(
{
 "manifest_version": 1,
 "name": "wholebody135",
 "background_channel": true,
 "parts": [
  {
   "id": 0,
   "name": "nose",
   "group": "body",
   "side": "center"
  },
  {
   "id": 1,
   "name": "neck",
   "group": "body",
   "side": "center"
  },
  {
   "id": 2,
   "name": "r_shoulder",
   "group": "body",
   "side": "right"
  },
  {
   "id": 3,
   "name": "r_elbow",
   "group": "body",
   "side": "right"
  },
  {
   "id": 4,
   "name": "r_wrist",
   "group": "body",
   "side": "right"
  },
  {
   "id": 5,
   "name": "l_shoulder",
   "group": "body",
   "side": "left"
  },
  {
   "id": 6,
   "name": "l_elbow",
   "group": "body",
   "side": "left"
  },
  {
   "id": 7,
   "name": "l_wrist",
   "group": "body",
   "side": "left"
  },
  {
   "id": 8,
   "name": "mid_hip",
   "group": "body",
   "side": "center"
  },
  {
   "id": 9,
   "name": "r_hip",
   "group": "body",
   "side": "right"
  },
  {
   "id": 10,
   "name": "r_knee",
   "group": "body",
   "side": "right"
  },
  {
   "id": 11,
   "name": "r_ankle",
   "group": "body",
   "side": "right"
  },
  {
   "id": 12,
   "name": "l_hip",
   "group": "body",
   "side": "left"
  },
  {
   "id": 13,
   "name": "l_knee",
   "group": "body",
   "side": "left"
  },
  {
   "id": 14,
   "name": "l_ankle",
   "group": "body",
   "side": "left"
  },
  {
   "id": 15,
   "name": "r_eye",
   "group": "body",
   "side": "right"
  },
  {
   "id": 16,
   "name": "l_eye",
   "group": "body",
   "side": "left"
  },
  {
   "id": 17,
   "name": "r_ear",
   "group": "body",
   "side": "right"
  },
  {
   "id": 18,
   "name": "l_ear",
   "group": "body",
   "side": "left"
  },
  {
   "id": 19,
   "name": "l_big_toe",
   "group": "foot",
   "side": "left"
  },
  {
   "id": 20,
   "name": "l_small_toe",
   "group": "foot",
   "side": "left"
  },
  {
   "id": 21,
   "name": "l_heel",
   "group": "foot",
   "side": "left"
  },
  {
   "id": 22,
   "name": "r_big_toe",
   "group": "foot",
   "side": "right"
  },
  {
   "id": 23,
   "name": "r_small_toe",
   "group": "foot",
   "side": "right"
  },
  {
   "id": 24,
   "name": "r_heel",
   "group": "foot",
   "side": "right"
  },
  {
   "id": 25,
   "name": "face_0",
   "group": "face",
   "side": "right"
  },
  {
   "id": 26,
   "name": "face_1",
   "group": "face",
   "side": "right"
  },
  {
   "id": 27,
   "name": "face_2",
   "group": "face",
   "side": "right"
  },
  {
   "id": 28,
   "name": "face_3",
   "group": "face",
   "side": "right"
  },
  {
   "id": 29,
   "name": "face_4",
   "group": "face",
   "side": "right"
  },
  {
   "id": 30,
   "name": "face_5",
   "group": "face",
   "side": "right"
  },
  {
   "id": 31,
   "name": "face_6",
   "group": "face",
   "side": "right"
  },
  {
   "id": 32,
   "name": "face_7",
   "group": "face",
   "side": "right"
  },
  {
   "id": 33,
   "name": "face_8",
   "group": "face",
   "side": "center"
  },
  {
   "id": 34,
   "name": "face_9",
   "group": "face",
   "side": "left"
  },
  {
   "id": 35,
   "name": "face_10",
   "group": "face",
   "side": "left"
  },
  {
   "id": 36,
   "name": "face_11",
   "group": "face",
   "side": "left"
  },
  {
   "id": 37,
   "name": "face_12",
   "group": "face",
   "side": "left"
  },
  {
   "id": 38,
   "name": "face_13",
   "group": "face",
   "side": "left"
  },
  {
   "id": 39,
   "name": "face_14",
   "group": "face",
   "side": "left"
  },
  {
   "id": 40,
   "name": "face_15",
   "group": "face",
   "side": "left"
  },
  {
   "id": 41,
   "name": "face_16",
   "group": "face",
   "side": "left"
  },
  {
   "id": 42,
   "name": "face_17",
   "group": "face",
   "side": "right"
  },
  {
   "id": 43,
   "name": "face_18",
   "group": "face",
   "side": "right"
  },
  {
   "id": 44,
   "name": "face_19",
   "group": "face",
   "side": "right"
  },
  {
   "id": 45,
   "name": "face_20",
   "group": "face",
   "side": "right"
  },
  {
   "id": 46,
   "name": "face_21",
   "group": "face",
   "side": "right"
  },
  {
   "id": 47,
   "name": "face_22",
   "group": "face",
   "side": "left"
  },
  {
   "id": 48,
   "name": "face_23",
   "group": "face",
   "side": "left"
  },
  {
   "id": 49,
   "name": "face_24",
   "group": "face",
   "side": "left"
  },
  {
   "id": 50,
   "name": "face_25",
   "group": "face",
   "side": "left"
  },
  {
   "id": 51,
   "name": "face_26",
   "group": "face",
   "side": "left"
  },
  {
   "id": 52,
   "name": "face_27",
   "group": "face",
   "side": "center"
  },
  {
   "id": 53,
   "name": "face_28",
   "group": "face",
   "side": "center"
  },
  {
   "id": 54,
   "name": "face_29",
   "group": "face",
   "side": "center"
  },
  {
   "id": 55,
   "name": "face_30",
   "group": "face",
   "side": "center"
  },
  {
   "id": 56,
   "name": "face_31",
   "group": "face",
   "side": "right"
  },
  {
   "id": 57,
   "name": "face_32",
   "group": "face",
   "side": "right"
  },
  {
   "id": 58,
   "name": "face_33",
   "group": "face",
   "side": "center"
  },
  {
   "id": 59,
   "name": "face_34",
   "group": "face",
   "side": "left"
  },
  {
   "id": 60,
   "name": "face_35",
   "group": "face",
   "side": "left"
  },
  {
   "id": 61,
   "name": "face_36",
   "group": "face",
   "side": "right"
  },
  {
   "id": 62,
   "name": "face_37",
   "group": "face",
   "side": "right"
  },
  {
   "id": 63,
   "name": "face_38",
   "group": "face",
   "side": "right"
  },
  {
   "id": 64,
   "name": "face_39",
   "group": "face",
   "side": "right"
  },
  {
   "id": 65,
   "name": "face_40",
   "group": "face",
   "side": "right"
  },
  {
   "id": 66,
   "name": "face_41",
   "group": "face",
   "side": "right"
  },
  {
   "id": 67,
   "name": "face_42",
   "group": "face",
   "side": "left"
  },
  {
   "id": 68,
   "name": "face_43",
   "group": "face",
   "side": "left"
  },
  {
   "id": 69,
   "name": "face_44",
   "group": "face",
   "side": "left"
  },
  {
   "id": 70,
   "name": "face_45",
   "group": "face",
   "side": "left"
  },
  {
   "id": 71,
   "name": "face_46",
   "group": "face",
   "side": "left"
  },
  {
   "id": 72,
   "name": "face_47",
   "group": "face",
   "side": "left"
  },
  {
   "id": 73,
   "name": "face_48",
   "group": "face",
   "side": "right"
  },
  {
   "id": 74,
   "name": "face_49",
   "group": "face",
   "side": "right"
  },
  {
   "id": 75,
   "name": "face_50",
   "group": "face",
   "side": "right"
  },
  {
   "id": 76,
   "name": "face_51",
   "group": "face",
   "side": "center"
  },
  {
   "id": 77,
   "name": "face_52",
   "group": "face",
   "side": "left"
  },
  {
   "id": 78,
   "name": "face_53",
   "group": "face",
   "side": "left"
  },
  {
   "id": 79,
   "name": "face_54",
   "group": "face",
   "side": "left"
  },
  {
   "id": 80,
   "name": "face_55",
   "group": "face",
   "side": "left"
  },
  {
   "id": 81,
   "name": "face_56",
   "group": "face",
   "side": "left"
  },
  {
   "id": 82,
   "name": "face_57",
   "group": "face",
   "side": "center"
  },
  {
   "id": 83,
   "name": "face_58",
   "group": "face",
   "side": "right"
  },
  {
   "id": 84,
   "name": "face_59",
   "group": "face",
   "side": "right"
  },
  {
   "id": 85,
   "name": "face_60",
   "group": "face",
   "side": "right"
  },
  {
   "id": 86,
   "name": "face_61",
   "group": "face",
   "side": "right"
  },
  {
   "id": 87,
   "name": "face_62",
   "group": "face",
   "side": "center"
  },
  {
   "id": 88,
   "name": "face_63",
   "group": "face",
   "side": "left"
  },
  {
   "id": 89,
   "name": "face_64",
   "group": "face",
   "side": "left"
  },
  {
   "id": 90,
   "name": "face_65",
   "group": "face",
   "side": "left"
  },
  {
   "id": 91,
   "name": "face_66",
   "group": "face",
   "side": "center"
  },
  {
   "id": 92,
   "name": "face_67",
   "group": "face",
   "side": "right"
  },
  {
   "id": 93,
   "name": "face_68",
   "group": "face",
   "side": "right"
  },
  {
   "id": 94,
   "name": "face_69",
   "group": "face",
   "side": "left"
  },
  {
   "id": 95,
   "name": "r_hand_thumb1",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 96,
   "name": "r_hand_thumb2",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 97,
   "name": "r_hand_thumb3",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 98,
   "name": "r_hand_thumb4",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 99,
   "name": "r_hand_index1",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 100,
   "name": "r_hand_index2",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 101,
   "name": "r_hand_index3",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 102,
   "name": "r_hand_index4",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 103,
   "name": "r_hand_middle1",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 104,
   "name": "r_hand_middle2",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 105,
   "name": "r_hand_middle3",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 106,
   "name": "r_hand_middle4",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 107,
   "name": "r_hand_ring1",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 108,
   "name": "r_hand_ring2",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 109,
   "name": "r_hand_ring3",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 110,
   "name": "r_hand_ring4",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 111,
   "name": "r_hand_pinky1",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 112,
   "name": "r_hand_pinky2",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 113,
   "name": "r_hand_pinky3",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 114,
   "name": "r_hand_pinky4",
   "group": "hand",
   "side": "right"
  },
  {
   "id": 115,
   "name": "l_hand_thumb1",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 116,
   "name": "l_hand_thumb2",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 117,
   "name": "l_hand_thumb3",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 118,
   "name": "l_hand_thumb4",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 119,
   "name": "l_hand_index1",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 120,
   "name": "l_hand_index2",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 121,
   "name": "l_hand_index3",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 122,
   "name": "l_hand_index4",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 123,
   "name": "l_hand_middle1",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 124,
   "name": "l_hand_middle2",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 125,
   "name": "l_hand_middle3",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 126,
   "name": "l_hand_middle4",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 127,
   "name": "l_hand_ring1",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 128,
   "name": "l_hand_ring2",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 129,
   "name": "l_hand_ring3",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 130,
   "name": "l_hand_ring4",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 131,
   "name": "l_hand_pinky1",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 132,
   "name": "l_hand_pinky2",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 133,
   "name": "l_hand_pinky3",
   "group": "hand",
   "side": "left"
  },
  {
   "id": 134,
   "name": "l_hand_pinky4",
   "group": "hand",
   "side": "left"
  }
 ],
 "limbs": [
  {
   "id": 0,
   "src": 1,
   "dst": 8
  },
  {
   "id": 1,
   "src": 1,
   "dst": 2
  },
  {
   "id": 2,
   "src": 1,
   "dst": 5
  },
  {
   "id": 3,
   "src": 2,
   "dst": 3
  },
  {
   "id": 4,
   "src": 3,
   "dst": 4
  },
  {
   "id": 5,
   "src": 5,
   "dst": 6
  },
  {
   "id": 6,
   "src": 6,
   "dst": 7
  },
  {
   "id": 7,
   "src": 8,
   "dst": 9
  },
  {
   "id": 8,
   "src": 9,
   "dst": 10
  },
  {
   "id": 9,
   "src": 10,
   "dst": 11
  },
  {
   "id": 10,
   "src": 8,
   "dst": 12
  },
  {
   "id": 11,
   "src": 12,
   "dst": 13
  },
  {
   "id": 12,
   "src": 13,
   "dst": 14
  },
  {
   "id": 13,
   "src": 1,
   "dst": 0
  },
  {
   "id": 14,
   "src": 0,
   "dst": 15
  },
  {
   "id": 15,
   "src": 15,
   "dst": 17
  },
  {
   "id": 16,
   "src": 0,
   "dst": 16
  },
  {
   "id": 17,
   "src": 16,
   "dst": 18
  },
  {
   "id": 18,
   "src": 2,
   "dst": 17
  },
  {
   "id": 19,
   "src": 5,
   "dst": 18
  },
  {
   "id": 20,
   "src": 14,
   "dst": 19
  },
  {
   "id": 21,
   "src": 19,
   "dst": 20
  },
  {
   "id": 22,
   "src": 14,
   "dst": 21
  },
  {
   "id": 23,
   "src": 11,
   "dst": 22
  },
  {
   "id": 24,
   "src": 22,
   "dst": 23
  },
  {
   "id": 25,
   "src": 11,
   "dst": 24
  },
  {
   "id": 26,
   "src": 15,
   "dst": 63
  },
  {
   "id": 27,
   "src": 63,
   "dst": 64
  },
  {
   "id": 28,
   "src": 64,
   "dst": 65
  },
  {
   "id": 29,
   "src": 65,
   "dst": 93
  },
  {
   "id": 30,
   "src": 93,
   "dst": 66
  },
  {
   "id": 31,
   "src": 66,
   "dst": 61
  },
  {
   "id": 32,
   "src": 61,
   "dst": 62
  },
  {
   "id": 33,
   "src": 15,
   "dst": 45
  },
  {
   "id": 34,
   "src": 45,
   "dst": 44
  },
  {
   "id": 35,
   "src": 44,
   "dst": 43
  },
  {
   "id": 36,
   "src": 43,
   "dst": 42
  },
  {
   "id": 37,
   "src": 45,
   "dst": 46
  },
  {
   "id": 38,
   "src": 64,
   "dst": 52
  },
  {
   "id": 39,
   "src": 52,
   "dst": 53
  },
  {
   "id": 40,
   "src": 53,
   "dst": 54
  },
  {
   "id": 41,
   "src": 54,
   "dst": 55
  },
  {
   "id": 42,
   "src": 55,
   "dst": 58
  },
  {
   "id": 43,
   "src": 58,
   "dst": 57
  },
  {
   "id": 44,
   "src": 57,
   "dst": 56
  },
  {
   "id": 45,
   "src": 56,
   "dst": 75
  },
  {
   "id": 46,
   "src": 75,
   "dst": 86
  },
  {
   "id": 47,
   "src": 86,
   "dst": 85
  },
  {
   "id": 48,
   "src": 85,
   "dst": 92
  },
  {
   "id": 49,
   "src": 92,
   "dst": 83
  },
  {
   "id": 50,
   "src": 85,
   "dst": 74
  },
  {
   "id": 51,
   "src": 74,
   "dst": 73
  },
  {
   "id": 52,
   "src": 73,
   "dst": 84
  },
  {
   "id": 53,
   "src": 86,
   "dst": 87
  },
  {
   "id": 54,
   "src": 87,
   "dst": 76
  },
  {
   "id": 55,
   "src": 84,
   "dst": 30
  },
  {
   "id": 56,
   "src": 84,
   "dst": 31
  },
  {
   "id": 57,
   "src": 31,
   "dst": 32
  },
  {
   "id": 58,
   "src": 32,
   "dst": 33
  },
  {
   "id": 59,
   "src": 30,
   "dst": 29
  },
  {
   "id": 60,
   "src": 29,
   "dst": 28
  },
  {
   "id": 61,
   "src": 28,
   "dst": 27
  },
  {
   "id": 62,
   "src": 27,
   "dst": 26
  },
  {
   "id": 63,
   "src": 26,
   "dst": 25
  },
  {
   "id": 64,
   "src": 16,
   "dst": 68
  },
  {
   "id": 65,
   "src": 68,
   "dst": 67
  },
  {
   "id": 66,
   "src": 67,
   "dst": 72
  },
  {
   "id": 67,
   "src": 72,
   "dst": 94
  },
  {
   "id": 68,
   "src": 94,
   "dst": 71
  },
  {
   "id": 69,
   "src": 71,
   "dst": 70
  },
  {
   "id": 70,
   "src": 70,
   "dst": 69
  },
  {
   "id": 71,
   "src": 16,
   "dst": 48
  },
  {
   "id": 72,
   "src": 48,
   "dst": 49
  },
  {
   "id": 73,
   "src": 49,
   "dst": 50
  },
  {
   "id": 74,
   "src": 50,
   "dst": 51
  },
  {
   "id": 75,
   "src": 48,
   "dst": 47
  },
  {
   "id": 76,
   "src": 51,
   "dst": 41
  },
  {
   "id": 77,
   "src": 41,
   "dst": 40
  },
  {
   "id": 78,
   "src": 40,
   "dst": 39
  },
  {
   "id": 79,
   "src": 39,
   "dst": 38
  },
  {
   "id": 80,
   "src": 38,
   "dst": 37
  },
  {
   "id": 81,
   "src": 37,
   "dst": 36
  },
  {
   "id": 82,
   "src": 36,
   "dst": 80
  },
  {
   "id": 83,
   "src": 80,
   "dst": 79
  },
  {
   "id": 84,
   "src": 79,
   "dst": 78
  },
  {
   "id": 85,
   "src": 78,
   "dst": 89
  },
  {
   "id": 86,
   "src": 89,
   "dst": 90
  },
  {
   "id": 87,
   "src": 89,
   "dst": 88
  },
  {
   "id": 88,
   "src": 88,
   "dst": 77
  },
  {
   "id": 89,
   "src": 90,
   "dst": 81
  },
  {
   "id": 90,
   "src": 77,
   "dst": 60
  },
  {
   "id": 91,
   "src": 60,
   "dst": 59
  },
  {
   "id": 92,
   "src": 90,
   "dst": 91
  },
  {
   "id": 93,
   "src": 91,
   "dst": 82
  },
  {
   "id": 94,
   "src": 80,
   "dst": 35
  },
  {
   "id": 95,
   "src": 35,
   "dst": 34
  },
  {
   "id": 96,
   "src": 4,
   "dst": 95
  },
  {
   "id": 97,
   "src": 95,
   "dst": 96
  },
  {
   "id": 98,
   "src": 96,
   "dst": 97
  },
  {
   "id": 99,
   "src": 97,
   "dst": 98
  },
  {
   "id": 100,
   "src": 4,
   "dst": 99
  },
  {
   "id": 101,
   "src": 99,
   "dst": 100
  },
  {
   "id": 102,
   "src": 100,
   "dst": 101
  },
  {
   "id": 103,
   "src": 101,
   "dst": 102
  },
  {
   "id": 104,
   "src": 4,
   "dst": 103
  },
  {
   "id": 105,
   "src": 103,
   "dst": 104
  },
  {
   "id": 106,
   "src": 104,
   "dst": 105
  },
  {
   "id": 107,
   "src": 105,
   "dst": 106
  },
  {
   "id": 108,
   "src": 4,
   "dst": 107
  },
  {
   "id": 109,
   "src": 107,
   "dst": 108
  },
  {
   "id": 110,
   "src": 108,
   "dst": 109
  },
  {
   "id": 111,
   "src": 109,
   "dst": 110
  },
  {
   "id": 112,
   "src": 4,
   "dst": 111
  },
  {
   "id": 113,
   "src": 111,
   "dst": 112
  },
  {
   "id": 114,
   "src": 112,
   "dst": 113
  },
  {
   "id": 115,
   "src": 113,
   "dst": 114
  },
  {
   "id": 116,
   "src": 7,
   "dst": 115
  },
  {
   "id": 117,
   "src": 115,
   "dst": 116
  },
  {
   "id": 118,
   "src": 116,
   "dst": 117
  },
  {
   "id": 119,
   "src": 117,
   "dst": 118
  },
  {
   "id": 120,
   "src": 7,
   "dst": 119
  },
  {
   "id": 121,
   "src": 119,
   "dst": 120
  },
  {
   "id": 122,
   "src": 120,
   "dst": 121
  },
  {
   "id": 123,
   "src": 121,
   "dst": 122
  },
  {
   "id": 124,
   "src": 7,
   "dst": 123
  },
  {
   "id": 125,
   "src": 123,
   "dst": 124
  },
  {
   "id": 126,
   "src": 124,
   "dst": 125
  },
  {
   "id": 127,
   "src": 125,
   "dst": 126
  },
  {
   "id": 128,
   "src": 7,
   "dst": 127
  },
  {
   "id": 129,
   "src": 127,
   "dst": 128
  },
  {
   "id": 130,
   "src": 128,
   "dst": 129
  },
  {
   "id": 131,
   "src": 129,
   "dst": 130
  },
  {
   "id": 132,
   "src": 7,
   "dst": 131
  },
  {
   "id": 133,
   "src": 131,
   "dst": 132
  },
  {
   "id": 134,
   "src": 132,
   "dst": 133
  },
  {
   "id": 135,
   "src": 133,
   "dst": 134
  }
 ],
 "anchors": [
  {
   "part": 11,
   "groups": [
    "body",
    "foot"
   ]
  },
  {
   "part": 14,
   "groups": [
    "body",
    "foot"
   ]
  },
  {
   "part": 4,
   "groups": [
    "body",
    "hand"
   ]
  },
  {
   "part": 7,
   "groups": [
    "body",
    "hand"
   ]
  },
  {
   "part": 15,
   "groups": [
    "body",
    "face"
   ]
  },
  {
   "part": 16,
   "groups": [
    "body",
    "face"
   ]
  }
 ],
 "oks_kappa": {
  "0": 0.052,
  "1": 0.158,
  "2": 0.158,
  "3": 0.144,
  "4": 0.124,
  "5": 0.158,
  "6": 0.144,
  "7": 0.124,
  "8": 0.214,
  "9": 0.214,
  "10": 0.174,
  "11": 0.178,
  "12": 0.214,
  "13": 0.174,
  "14": 0.178,
  "15": 0.05,
  "16": 0.05,
  "17": 0.07,
  "18": 0.07,
  "19": 0.178,
  "20": 0.178,
  "21": 0.178,
  "22": 0.178,
  "23": 0.178,
  "24": 0.178,
  "25": 0.025,
  "26": 0.025,
  "27": 0.025,
  "28": 0.025,
  "29": 0.025,
  "30": 0.025,
  "31": 0.025,
  "32": 0.025,
  "33": 0.025,
  "34": 0.025,
  "35": 0.025,
  "36": 0.025,
  "37": 0.025,
  "38": 0.025,
  "39": 0.025,
  "40": 0.025,
  "41": 0.025,
  "42": 0.025,
  "43": 0.025,
  "44": 0.025,
  "45": 0.025,
  "46": 0.025,
  "47": 0.025,
  "48": 0.025,
  "49": 0.025,
  "50": 0.025,
  "51": 0.025,
  "52": 0.025,
  "53": 0.025,
  "54": 0.025,
  "55": 0.025,
  "56": 0.025,
  "57": 0.025,
  "58": 0.025,
  "59": 0.025,
  "60": 0.025,
  "61": 0.025,
  "62": 0.025,
  "63": 0.025,
  "64": 0.025,
  "65": 0.025,
  "66": 0.025,
  "67": 0.025,
  "68": 0.025,
  "69": 0.025,
  "70": 0.025,
  "71": 0.025,
  "72": 0.025,
  "73": 0.025,
  "74": 0.025,
  "75": 0.025,
  "76": 0.025,
  "77": 0.025,
  "78": 0.025,
  "79": 0.025,
  "80": 0.025,
  "81": 0.025,
  "82": 0.025,
  "83": 0.025,
  "84": 0.025,
  "85": 0.025,
  "86": 0.025,
  "87": 0.025,
  "88": 0.025,
  "89": 0.025,
  "90": 0.025,
  "91": 0.025,
  "92": 0.025,
  "93": 0.025,
  "94": 0.025,
  "95": 0.035,
  "96": 0.035,
  "97": 0.035,
  "98": 0.035,
  "99": 0.035,
  "100": 0.035,
  "101": 0.035,
  "102": 0.035,
  "103": 0.035,
  "104": 0.035,
  "105": 0.035,
  "106": 0.035,
  "107": 0.035,
  "108": 0.035,
  "109": 0.035,
  "110": 0.035,
  "111": 0.035,
  "112": 0.035,
  "113": 0.035,
  "114": 0.035,
  "115": 0.035,
  "116": 0.035,
  "117": 0.035,
  "118": 0.035,
  "119": 0.035,
  "120": 0.035,
  "121": 0.035,
  "122": 0.035,
  "123": 0.035,
  "124": 0.035,
  "125": 0.035,
  "126": 0.035,
  "127": 0.035,
  "128": 0.035,
  "129": 0.035,
  "130": 0.035,
  "131": 0.035,
  "132": 0.035,
  "133": 0.035,
  "134": 0.035
 },
 "template": {
  "0": [
   0.0,
   -0.42
  ],
  "1": [
   0.0,
   -0.33
  ],
  "2": [
   -0.1,
   -0.33
  ],
  "3": [
   -0.14,
   -0.18
  ],
  "4": [
   -0.16,
   -0.04
  ],
  "5": [
   0.1,
   -0.33
  ],
  "6": [
   0.14,
   -0.18
  ],
  "7": [
   0.16,
   -0.04
  ],
  "8": [
   0.0,
   0.0
  ],
  "9": [
   -0.06,
   0.0
  ],
  "10": [
   -0.07,
   0.22
  ],
  "11": [
   -0.07,
   0.44
  ],
  "12": [
   0.06,
   0.0
  ],
  "13": [
   0.07,
   0.22
  ],
  "14": [
   0.07,
   0.44
  ],
  "15": [
   -0.02,
   -0.458
  ],
  "16": [
   0.02,
   -0.458
  ],
  "17": [
   -0.046,
   -0.436
  ],
  "18": [
   0.046,
   -0.436
  ],
  "19": [
   0.1,
   0.49
  ],
  "20": [
   0.122,
   0.482
  ],
  "21": [
   0.064,
   0.472
  ],
  "22": [
   -0.1,
   0.49
  ],
  "23": [
   -0.122,
   0.482
  ],
  "24": [
   -0.064,
   0.472
  ],
  "25": [
   -0.047,
   -0.452
  ],
  "26": [
   -0.046097,
   -0.437563
  ],
  "27": [
   -0.043422,
   -0.423681
  ],
  "28": [
   -0.039079,
   -0.410888
  ],
  "29": [
   -0.033234,
   -0.399674
  ],
  "30": [
   -0.026112,
   -0.390471
  ],
  "31": [
   -0.017986,
   -0.383633
  ],
  "32": [
   -0.009169,
   -0.379422
  ],
  "33": [
   -0.0,
   -0.378
  ],
  "34": [
   0.009169,
   -0.379422
  ],
  "35": [
   0.017986,
   -0.383633
  ],
  "36": [
   0.026112,
   -0.390471
  ],
  "37": [
   0.033234,
   -0.399674
  ],
  "38": [
   0.039079,
   -0.410888
  ],
  "39": [
   0.043422,
   -0.423681
  ],
  "40": [
   0.046097,
   -0.437563
  ],
  "41": [
   0.047,
   -0.452
  ],
  "42": [
   -0.04,
   -0.466
  ],
  "43": [
   -0.0325,
   -0.468828
  ],
  "44": [
   -0.025,
   -0.47
  ],
  "45": [
   -0.0175,
   -0.468828
  ],
  "46": [
   -0.01,
   -0.466
  ],
  "47": [
   0.01,
   -0.466
  ],
  "48": [
   0.0175,
   -0.468828
  ],
  "49": [
   0.025,
   -0.47
  ],
  "50": [
   0.0325,
   -0.468828
  ],
  "51": [
   0.04,
   -0.466
  ],
  "52": [
   0.0,
   -0.447
  ],
  "53": [
   0.0,
   -0.4395
  ],
  "54": [
   0.0,
   -0.432
  ],
  "55": [
   0.0,
   -0.4245
  ],
  "56": [
   -0.012,
   -0.41
  ],
  "57": [
   -0.006,
   -0.412
  ],
  "58": [
   0.0,
   -0.414
  ],
  "59": [
   0.006,
   -0.412
  ],
  "60": [
   0.012,
   -0.41
  ],
  "61": [
   -0.03,
   -0.449
  ],
  "62": [
   -0.0255,
   -0.452031
  ],
  "63": [
   -0.0165,
   -0.452031
  ],
  "64": [
   -0.012,
   -0.449
  ],
  "65": [
   -0.0165,
   -0.445969
  ],
  "66": [
   -0.0255,
   -0.445969
  ],
  "67": [
   0.012,
   -0.449
  ],
  "68": [
   0.0165,
   -0.452031
  ],
  "69": [
   0.0255,
   -0.452031
  ],
  "70": [
   0.03,
   -0.449
  ],
  "71": [
   0.0255,
   -0.445969
  ],
  "72": [
   0.0165,
   -0.445969
  ],
  "73": [
   -0.019,
   -0.398
  ],
  "74": [
   -0.016454,
   -0.402
  ],
  "75": [
   -0.0095,
   -0.404928
  ],
  "76": [
   -0.0,
   -0.406
  ],
  "77": [
   0.0095,
   -0.404928
  ],
  "78": [
   0.016454,
   -0.402
  ],
  "79": [
   0.019,
   -0.398
  ],
  "80": [
   0.016454,
   -0.394
  ],
  "81": [
   0.0095,
   -0.391072
  ],
  "82": [
   0.0,
   -0.39
  ],
  "83": [
   -0.0095,
   -0.391072
  ],
  "84": [
   -0.016454,
   -0.394
  ],
  "85": [
   -0.011,
   -0.398
  ],
  "86": [
   -0.007778,
   -0.400475
  ],
  "87": [
   -0.0,
   -0.4015
  ],
  "88": [
   0.007778,
   -0.400475
  ],
  "89": [
   0.011,
   -0.398
  ],
  "90": [
   0.007778,
   -0.395525
  ],
  "91": [
   0.0,
   -0.3945
  ],
  "92": [
   -0.007778,
   -0.395525
  ],
  "93": [
   -0.021,
   -0.4475
  ],
  "94": [
   0.021,
   -0.4475
  ],
  "95": [
   -0.172856,
   -0.024679
  ],
  "96": [
   -0.181855,
   -0.013954
  ],
  "97": [
   -0.190854,
   -0.00323
  ],
  "98": [
   -0.198567,
   0.005963
  ],
  "99": [
   -0.170353,
   -0.001363
  ],
  "100": [
   -0.173976,
   0.01216
  ],
  "101": [
   -0.177082,
   0.023751
  ],
  "102": [
   -0.17967,
   0.03341
  ],
  "103": [
   -0.16,
   0.001
  ],
  "104": [
   -0.16,
   0.016
  ],
  "105": [
   -0.16,
   0.029
  ],
  "106": [
   -0.16,
   0.04
  ],
  "107": [
   -0.151684,
   -0.000874
  ],
  "108": [
   -0.148773,
   0.01282
  ],
  "109": [
   -0.146278,
   0.024558
  ],
  "110": [
   -0.144407,
   0.033361
  ],
  "111": [
   -0.144951,
   -0.006199
  ],
  "112": [
   -0.14007,
   0.004764
  ],
  "113": [
   -0.136409,
   0.012986
  ],
  "114": [
   -0.133155,
   0.020294
  ],
  "115": [
   0.172856,
   -0.024679
  ],
  "116": [
   0.181855,
   -0.013954
  ],
  "117": [
   0.190854,
   -0.00323
  ],
  "118": [
   0.198567,
   0.005963
  ],
  "119": [
   0.170353,
   -0.001363
  ],
  "120": [
   0.173976,
   0.01216
  ],
  "121": [
   0.177082,
   0.023751
  ],
  "122": [
   0.17967,
   0.03341
  ],
  "123": [
   0.16,
   0.001
  ],
  "124": [
   0.16,
   0.016
  ],
  "125": [
   0.16,
   0.029
  ],
  "126": [
   0.16,
   0.04
  ],
  "127": [
   0.151684,
   -0.000874
  ],
  "128": [
   0.148773,
   0.01282
  ],
  "129": [
   0.146278,
   0.024558
  ],
  "130": [
   0.144407,
   0.033361
  ],
  "131": [
   0.144951,
   -0.006199
  ],
  "132": [
   0.14007,
   0.004764
  ],
  "133": [
   0.136409,
   0.012986
  ],
  "134": [
   0.133155,
   0.020294
  ]
 }
}
)WBMANIFEST";

}  // namespace wbpose::detail
