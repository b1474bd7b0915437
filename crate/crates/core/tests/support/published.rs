//! Independent transcription of the printed state counts: (label, DOF
//! count, printed R) per platform, in table order.

pub type Rows = &'static [(&'static str, u64, u64)];

pub const PUBLISHED: &[(&str, Rows)] = &[
    (
        "nao_table1",
        &[
            ("l/r hand", 2, 2),
            ("head yaw", 1, 2390),
            ("head pitch", 1, 680),
            ("l/r shoulder pitch", 2, 2390),
            ("l/r shoulder yaw", 2, 2390),
            ("l/r shoulder roll", 2, 865),
            ("l/r wrist yaw", 2, 2090),
            ("pelvis", 1, 1076),
            ("l/r hip roll", 2, 669),
            ("l/r hip pitch", 2, 1157),
            ("l/r knee pitch", 2, 1263),
            ("l/r ankle pitch", 2, 1211),
            ("l/r ankle roll", 2, 669),
        ],
    ),
    (
        "bellagio_base",
        &[
            ("oarsmen RX", 208, 160),
            ("oarsmen RY", 208, 160),
            ("oarsmen water", 208, 2),
            ("shooters", 1175, 2),
            ("lights", 6200, 13),
        ],
    ),
    (
        "Baxter",
        &[
            ("l/r S1", 2, 2),
            ("l/r E1", 2, 1530),
            ("l/r W1", 2, 2100),
            ("l/r S0", 2, 1950),
            ("l/r E0", 2, 3500),
            ("l/r W0", 2, 3505),
            ("l/r W2", 2, 3505),
        ],
    ),
    ("Khepera IV", &[("l/r wheel", 2, 3600)]),
    ("Roomba", &[("l/r wheel", 2, 3600)]),
    (
        "Kismet",
        &[
            ("l/r ears pitch", 2, 1350),
            ("l/r ears yaw", 2, 450),
            ("l/r eyelids", 2, 30),
            ("l/r brows pitch", 2, 200),
            ("l/r lips", 2, 600),
            ("jaw", 1, 450),
        ],
    ),
    (
        "PR2",
        &[
            ("l/r shoulder pan", 2, 1700),
            ("l/r shoulder tilt", 2, 1150),
            ("l/r upper arm roll", 2, 2700),
            ("l/r elbow flex", 2, 1400),
            ("l/r forearm roll", 2, 3600),
            ("l/r wrist pitch", 2, 1300),
            ("l/r wrist roll", 2, 3600),
            ("head pan", 1, 3500),
            ("head tilt", 1, 1150),
        ],
    ),
    ("Big Dog", &[("each leg (5) (x4)", 20, 1875)]),
    (
        "ASIMO",
        &[
            ("head", 3, 1875),
            ("arms", 14, 1875),
            ("hands", 4, 1875),
            ("torso", 1, 1875),
            ("legs", 12, 1875),
        ],
    ),
    (
        "Little Dog",
        &[
            ("l/r front knee RY", 2, 2340),
            ("l/r front hip RX", 2, 680),
            ("l/r front hip RY", 2, 337),
            ("l/r back knee RY", 2, 2340),
            ("l/r back hip RX", 2, 680),
            ("l/r back hip RY", 2, 337),
        ],
    ),
    (
        "Robonaut2",
        &[
            ("head yaw/pitch/roll", 3, 1875),
            ("l/r hands (12)", 24, 1875),
            ("l/r arms (7)", 14, 1875),
        ],
    ),
    (
        "KeepOn",
        &[
            ("tilt", 1, 1000),
            ("pan", 1, 4500),
            ("pon", 1, 1250),
            ("side", 1, 625),
        ],
    ),
    (
        "RoboSapien",
        &[
            ("l/r elbows", 2, 1800),
            ("l/r shoulders", 2, 1800),
            ("torso", 1, 1350),
            ("l/r hips", 2, 1200),
        ],
    ),
    (
        "Darwin",
        &[
            ("neck pitch", 1, 500),
            ("neck roll", 1, 1800),
            ("l/r elbow", 2, 1500),
            ("l/r shoulder rotation", 2, 2000),
            ("l/r shoulder compression", 2, 300),
            ("l/r knee", 2, 1500),
            ("l/r foot", 2, 900),
            ("l/r waist rotation", 2, 300),
            ("l/r knee/foot", 2, 1500),
            ("l/r waist bend", 2, 1000),
        ],
    ),
    (
        "Aibo",
        &[
            ("head pan", 1, 1780),
            ("head tilt", 1, 1250),
            ("head roll", 1, 580),
            ("shoulders", 4, 1000),
            ("torso", 1, 2340),
            ("knees", 4, 1750),
            ("l/r ears", 2, 200),
            ("tail (front to back)", 1, 450),
            ("tail (left to right)", 1, 250),
        ],
    ),
    (
        "Packbot",
        &[
            ("shoulder rot.", 1, 3600),
            ("shoulder pivot", 1, 2200),
            ("E1 pivot", 1, 3400),
            ("E2 pivot", 1, 3400),
            ("gripper rot.", 1, 3600),
            ("gripper I/O", 1, 1800),
            ("head rot.", 1, 3600),
            ("flipper", 1, 3600),
        ],
    ),
    (
        "Simon",
        &[
            ("torso", 2, 1500),
            ("l/r arm (7)", 14, 2000),
            ("face", 5, 2000),
        ],
    ),
    (
        "Cheetah",
        &[
            ("hip rot.", 4, 300),
            ("hip", 4, 1500),
            ("knee", 4, 2000),
            ("spine", 1, 200),
        ],
    ),
    (
        "LBR iiwa",
        &[
            ("axis 1", 1, 3400),
            ("axis 2", 1, 2400),
            ("axis 3", 1, 3400),
            ("axis 4", 1, 2400),
            ("axis 5", 1, 3400),
            ("axis 6", 1, 2400),
            ("axis 7", 1, 3500),
        ],
    ),
    (
        "KR60HA",
        &[
            ("axis 1", 1, 3700),
            ("axis 2", 1, 1700),
            ("axis 3", 1, 1780),
            ("axis 4", 1, 7000),
            ("axis 5", 1, 2380),
            ("axis 6", 1, 7000),
        ],
    ),
];

// 13 joint-table rows + 5 fountain rows + 94 appendix rows
pub const EXPECTED_ROWS: usize = 112;
