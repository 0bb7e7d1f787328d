//! Published values of the bound sequences for genus 1 to 35.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub g: u32,
    pub two_fib: Option<u64>,
    pub fib_simple: u64,
    pub a: u64,
    pub n: u64,
    pub c: u64,
    pub upper_simple: Option<u64>,
}

pub const TABLE: [GoldenRow; 35] = [
    GoldenRow {
        g: 1,
        two_fib: None,
        fib_simple: 1,
        a: 1,
        n: 1,
        c: 1,
        upper_simple: None,
    },
    GoldenRow {
        g: 2,
        two_fib: Some(2),
        fib_simple: 2,
        a: 2,
        n: 2,
        c: 2,
        upper_simple: None,
    },
    GoldenRow {
        g: 3,
        two_fib: Some(4),
        fib_simple: 4,
        a: 4,
        n: 4,
        c: 4,
        upper_simple: Some(4),
    },
    GoldenRow {
        g: 4,
        two_fib: Some(6),
        fib_simple: 7,
        a: 7,
        n: 7,
        c: 7,
        upper_simple: Some(7),
    },
    GoldenRow {
        g: 5,
        two_fib: Some(10),
        fib_simple: 12,
        a: 12,
        n: 12,
        c: 13,
        upper_simple: Some(13),
    },
    GoldenRow {
        g: 6,
        two_fib: Some(16),
        fib_simple: 20,
        a: 22,
        n: 23,
        c: 24,
        upper_simple: Some(25),
    },
    GoldenRow {
        g: 7,
        two_fib: Some(26),
        fib_simple: 33,
        a: 37,
        n: 39,
        c: 44,
        upper_simple: Some(49),
    },
    GoldenRow {
        g: 8,
        two_fib: Some(42),
        fib_simple: 54,
        a: 62,
        n: 67,
        c: 81,
        upper_simple: Some(97),
    },
    GoldenRow {
        g: 9,
        two_fib: Some(68),
        fib_simple: 88,
        a: 104,
        n: 118,
        c: 151,
        upper_simple: Some(193),
    },
    GoldenRow {
        g: 10,
        two_fib: Some(110),
        fib_simple: 143,
        a: 175,
        n: 204,
        c: 280,
        upper_simple: Some(385),
    },
    GoldenRow {
        g: 11,
        two_fib: Some(178),
        fib_simple: 232,
        a: 291,
        n: 343,
        c: 525,
        upper_simple: Some(769),
    },
    GoldenRow {
        g: 12,
        two_fib: Some(288),
        fib_simple: 376,
        a: 482,
        n: 592,
        c: 984,
        upper_simple: Some(1537),
    },
    GoldenRow {
        g: 13,
        two_fib: Some(466),
        fib_simple: 609,
        a: 796,
        n: 1001,
        c: 1859,
        upper_simple: Some(3073),
    },
    GoldenRow {
        g: 14,
        two_fib: Some(754),
        fib_simple: 986,
        a: 1315,
        n: 1693,
        c: 3511,
        upper_simple: Some(6145),
    },
    GoldenRow {
        g: 15,
        two_fib: Some(1220),
        fib_simple: 1596,
        a: 2166,
        n: 2857,
        c: 6682,
        upper_simple: Some(12289),
    },
    GoldenRow {
        g: 16,
        two_fib: Some(1974),
        fib_simple: 2583,
        a: 3559,
        n: 4806,
        c: 12709,
        upper_simple: Some(24577),
    },
    GoldenRow {
        g: 17,
        two_fib: Some(3194),
        fib_simple: 4180,
        a: 5838,
        n: 8045,
        c: 24334,
        upper_simple: Some(49153),
    },
    GoldenRow {
        g: 18,
        two_fib: Some(5168),
        fib_simple: 6764,
        a: 9569,
        n: 13467,
        c: 46565,
        upper_simple: Some(98305),
    },
    GoldenRow {
        g: 19,
        two_fib: Some(8362),
        fib_simple: 10945,
        a: 15665,
        n: 22464,
        c: 89626,
        upper_simple: Some(196609),
    },
    GoldenRow {
        g: 20,
        two_fib: Some(13530),
        fib_simple: 17710,
        a: 25612,
        n: 37396,
        c: 172381,
        upper_simple: Some(393217),
    },
    GoldenRow {
        g: 21,
        two_fib: Some(21892),
        fib_simple: 28656,
        a: 41831,
        n: 62194,
        c: 333262,
        upper_simple: Some(786433),
    },
    GoldenRow {
        g: 22,
        two_fib: Some(35422),
        fib_simple: 46367,
        a: 68270,
        n: 103246,
        c: 643733,
        upper_simple: Some(1572865),
    },
    GoldenRow {
        g: 23,
        two_fib: Some(57314),
        fib_simple: 75024,
        a: 111337,
        n: 170963,
        c: 1249147,
        upper_simple: Some(3145729),
    },
    GoldenRow {
        g: 24,
        two_fib: Some(92736),
        fib_simple: 121392,
        a: 181438,
        n: 282828,
        c: 2421592,
        upper_simple: Some(6291457),
    },
    GoldenRow {
        g: 25,
        two_fib: Some(150050),
        fib_simple: 196417,
        a: 295480,
        n: 467224,
        c: 4713715,
        upper_simple: Some(12582913),
    },
    GoldenRow {
        g: 26,
        two_fib: Some(242786),
        fib_simple: 317810,
        a: 480938,
        n: 770832,
        c: 9165792,
        upper_simple: Some(25165825),
    },
    GoldenRow {
        g: 27,
        two_fib: Some(392836),
        fib_simple: 514228,
        a: 782408,
        n: 1270267,
        c: 17888456,
        upper_simple: Some(50331649),
    },
    GoldenRow {
        g: 28,
        two_fib: Some(635622),
        fib_simple: 832039,
        a: 1272250,
        n: 2091030,
        c: 34873456,
        upper_simple: Some(100663297),
    },
    GoldenRow {
        g: 29,
        two_fib: Some(1028458),
        fib_simple: 1346268,
        a: 2067870,
        n: 3437839,
        c: 68212220,
        upper_simple: Some(201326593),
    },
    GoldenRow {
        g: 30,
        two_fib: Some(1664080),
        fib_simple: 2178308,
        a: 3359757,
        n: 5646773,
        c: 133269997,
        upper_simple: Some(402653185),
    },
    GoldenRow {
        g: 31,
        two_fib: Some(2692538),
        fib_simple: 3524577,
        a: 5456862,
        n: 9266788,
        c: 261167821,
        upper_simple: Some(805306369),
    },
    GoldenRow {
        g: 32,
        two_fib: Some(4356618),
        fib_simple: 5702886,
        a: 8860132,
        n: 15195070,
        c: 511211652,
        upper_simple: Some(1610612737),
    },
    GoldenRow {
        g: 33,
        two_fib: Some(7049156),
        fib_simple: 9227464,
        a: 14381714,
        n: 24896206,
        c: 1003436520,
        upper_simple: Some(3221225473),
    },
    GoldenRow {
        g: 34,
        two_fib: Some(11405774),
        fib_simple: 14930351,
        a: 23338153,
        n: 40761087,
        c: 1967293902,
        upper_simple: Some(6442450945),
    },
    GoldenRow {
        g: 35,
        two_fib: Some(18454930),
        fib_simple: 24157816,
        a: 37863301,
        n: 66687201,
        c: 3866902804,
        upper_simple: Some(12884901889),
    },
];

pub fn row(g: u32) -> Option<&'static GoldenRow> {
    TABLE.get((g as usize).checked_sub(1)?)
}
