mod support;

use fde_series::harness::reference::{
    parse_published, published_error, LOGISTIC_VALUES, TANH_ERRORS_T01,
};
use fde_series::harness::{error_table, Method, TableMode};
use fde_series::model::wave_u;
use fde_series::rdtm::build_spectra;
use fde_series::{DoubleDouble, Problem, Scalar};
use support::{central_difference, factorial, logistic_spectrum_closed};

// The published logistic values are reproduced by the ten-term sums at
// t = 0.1 in every method column.
#[test]
fn logistic_values_at_a_tenth() {
    let p = Problem::logistic(10).unwrap();
    let xs: Vec<f64> = LOGISTIC_VALUES.iter().map(|&(x, _)| x).collect();
    let rows = error_table(&p, &Method::ALL, &xs, 0.1, TableMode::ValuesOnly).unwrap();
    for (row, &(_, text)) in rows.iter().zip(&LOGISTIC_VALUES) {
        let want = parse_published(text).unwrap();
        for m in Method::ALL {
            let got = row.value(m).unwrap();
            assert!(
                (got - want).abs() <= 5e-9,
                "x={} {m}: {got} vs {want}",
                row.x
            );
        }
    }
}

#[test]
fn published_adm_and_ldm_columns_above_the_noise_floor() {
    let p = Problem::tanh_wave(3.0, 10).unwrap();
    let rows = error_table(
        &p,
        &Method::ALL,
        &[-2.0, 0.0],
        0.1,
        TableMode::Errors {
            allow_past_front: false,
        },
    )
    .unwrap();
    for m in [Method::Adm, Method::Ldm] {
        let at0 = published_error(&TANH_ERRORS_T01, m, 0.0).unwrap();
        let at2 = published_error(&TANH_ERRORS_T01, m, -2.0).unwrap();
        assert!((rows[1].abs_error(m).unwrap() - at0).abs() <= 1e-9, "{m}");
        assert!((rows[0].abs_error(m).unwrap() - at2).abs() <= 1e-13, "{m}");
    }
}

#[test]
fn logistic_fifth_spectrum_sign() {
    let p = Problem::logistic(5).unwrap();
    let h = DoubleDouble::new(1e-3);
    for x in [-6.0, -2.5, -0.3] {
        let engine = build_spectra(&p, x).unwrap().spectra()[5].value();
        let xd = DoubleDouble::new(x);
        let fd = central_difference(|t| wave_u(&p, xd, t), DoubleDouble::new(0.0), h, 5)
            .to_f64_lossy()
            / factorial(5);
        assert!(
            (engine - fd).abs() <= 1e-7 * engine.abs(),
            "x={x}: {engine} vs {fd}"
        );
        // The printed closed form carries the opposite sign.
        let printed = logistic_spectrum_closed(x, 5);
        assert!((engine + printed).abs() <= 1e-11 * printed.abs(), "x={x}");
    }
}

#[test]
fn spectra_agree_across_precisions() {
    let p = Problem::tanh_wave(1.0, 6).unwrap();
    let x = -0.8;
    let v64 = build_spectra(&p, x).unwrap().center_values();
    let v32 = build_spectra(&p, x as f32).unwrap().center_values();
    let vdd = build_spectra(&p, DoubleDouble::new(x))
        .unwrap()
        .center_values();
    for k in 0..=6 {
        let dd = vdd[k].to_f64_lossy();
        assert!((v64[k] - dd).abs() <= 1e-14 * dd.abs().max(1.0), "k={k}");
        assert!(
            (v32[k] as f64 - dd).abs() <= 1e-4 * dd.abs().max(1.0),
            "k={k}"
        );
    }
}
