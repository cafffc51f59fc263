//! Carrier crate for the acceptance-suite integration tests in `tests/`.
