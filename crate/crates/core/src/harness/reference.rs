//! Published reference numbers, kept in their original typography
//! (decimal comma, `E` exponents, `sec` suffixes) and read through
//! [`parse_published`].

use super::Method;
use crate::{Error, Result};

/// Parses numbers such as `0,202117817743509E-14`, `1,025sec` or `15,910se`.
pub fn parse_published(text: &str) -> Result<f64> {
    let s = text.trim();
    let s = s
        .strip_suffix("sec")
        .or_else(|| s.strip_suffix("se"))
        .unwrap_or(s);
    s.replace(',', ".")
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("unreadable published number '{text}'")))
}

/// Absolute errors with columns ADM, LDM, RDTM for c = 3, ten terms.
pub type ErrorTable = [(f64, [&'static str; 3]); 6];

/// t = 0.1
pub const TANH_ERRORS_T01: ErrorTable = [
    (
        -10.0,
        [
            "0,202117817743509E-14",
            "0,202117817743510E-14",
            "0,202117817743509E-14",
        ],
    ),
    (
        -8.0,
        [
            "0,293257141972964E-14",
            "0,293257141972664E-14",
            "0,293257141972964E-14",
        ],
    ),
    (
        -6.0,
        [
            "0,45650705281285E-15",
            "0,45650705281385E-15",
            "0,45650705281285E-15",
        ],
    ),
    (
        -4.0,
        [
            "0,11116665360728E-12",
            "0,11116665464828E-12",
            "0,11116665360828E-12",
        ],
    ),
    (
        -2.0,
        [
            "0,851484003871439E-10",
            "0,851483993870438E-10",
            "0,851484003871439E-10",
        ],
    ),
    (
        0.0,
        ["0,10317037658E-4", "0,10317037658E-4", "0,10317037658E-4"],
    ),
];

/// t = 0.01
pub const TANH_ERRORS_T001: ErrorTable = [
    (
        -10.0,
        [
            "0,308694683847448E-15",
            "0,308694683847448E-15",
            "0,308694683847448E-15",
        ],
    ),
    (
        -8.0,
        [
            "0,507183534943173E-14",
            "0,507183534943173E-14",
            "0,507183534943173E-14",
        ],
    ),
    (
        -6.0,
        [
            "0,728297653568755E-15",
            "0,728297653568755E-15",
            "0,728297653568755E-15",
        ],
    ),
    (
        -4.0,
        [
            "0,695712017581145E-14",
            "0,695712017481141E-14",
            "0,695712017581145E-14",
        ],
    ),
    (
        -2.0,
        [
            "0,682573115077685E-15",
            "0,682574115077685E-15",
            "0,682573115077685E-15",
        ],
    ),
    (0.0, ["0,1E-15", "0,1E-15", "0,1E-15"]),
];

/// t = 0.001
pub const TANH_ERRORS_T0001: ErrorTable = [
    (
        -10.0,
        [
            "0,323329724865253E-16",
            "0,323329724865253E-16",
            "0,323329724865253E-16",
        ],
    ),
    (
        -8.0,
        [
            "0,300092135265223E-14",
            "0,300092135265223E-14",
            "0,300092135265223E-14",
        ],
    ),
    (
        -6.0,
        [
            "0,733106061807855E-14",
            "0,733106061807855E-14",
            "0,733106061807855E-14",
        ],
    ),
    (
        -4.0,
        [
            "0,483644638909495E-14",
            "0,483644638909395E-14",
            "0,483644638909495E-14",
        ],
    ),
    (
        -2.0,
        [
            "0,522768342580599E-14",
            "0,522768342680599E-14",
            "0,522768342580599E-14",
        ],
    ),
    (0.0, ["0,4E-16", "0,4E-16", "0,4E-16"]),
];

/// Logistic-front values, identical in all three method columns.
pub const LOGISTIC_VALUES: [(f64, &str); 11] = [
    (-10.0, "0,4999557229"),
    (-9.0, "0,4998796515"),
    (-8.0, "0,4996729266"),
    (-7.0, "0,4991114228"),
    (-6.0, "0,4975882790"),
    (-5.0, "0,4934713173"),
    (-4.0, "0,4824500775"),
    (-3.0, "0,4536908506"),
    (-2.0, "0,3833970310"),
    (-1.0, "0,2359453940"),
    (0.0, "0,006249674499"),
];

/// Published CPU seconds per step count, columns ADM, LDM, RDTM.
pub type TimingTable = [(usize, [&'static str; 3]); 5];

pub const TANH_TIMINGS: TimingTable = [
    (5, ["0,747sec", "1,212sec", "0,488sec"]),
    (10, ["1,316sec", "2,813sec", "1,025sec"]),
    (15, ["2,67sec", "4,656sec", "1,846sec"]),
    (20, ["5,235sec", "9,478sec", "3,738sec"]),
    (25, ["9,755sec", "15,910se", "5,716sec"]),
];

pub const LOGISTIC_TIMINGS: TimingTable = [
    (5, ["0,745sec", "1,182sec", "0,491sec"]),
    (10, ["1,524sec", "2,514sec", "0,994sec"]),
    (15, ["3,292sec", "4,499sec", "2,245sec"]),
    (20, ["7,068sec", "11,518sec", "4,095sec"]),
    (25, ["14,153sec", "23,32sec", "7,681sec"]),
];

fn column(method: Method) -> usize {
    match method {
        Method::Adm => 0,
        Method::Ldm => 1,
        Method::Rdtm => 2,
    }
}

/// Published absolute error for `method` at `x` from one of the error tables.
pub fn published_error(table: &ErrorTable, method: Method, x: f64) -> Option<f64> {
    let (_, row) = table.iter().find(|(tx, _)| *tx == x)?;
    parse_published(row[column(method)]).ok()
}

/// Published CPU time for `method` at `steps`.
pub fn published_seconds(table: &TimingTable, method: Method, steps: usize) -> Option<f64> {
    let (_, row) = table.iter().find(|(s, _)| *s == steps)?;
    parse_published(row[column(method)]).ok()
}
