//! Runs every cargo example so they stay in sync with the library.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            #![allow(dead_code)]
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(partitions);
example!(q_series);
example!(schur_pieri);
example!(k_schur);
example!(grassmann_hilbert);
example!(basis_reports);
example!(lagrangian);
example!(sweep);
