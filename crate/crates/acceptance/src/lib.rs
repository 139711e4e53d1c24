//! Holds the `acceptance` test target. Run it with
//! `cargo test -p tokbin-acceptance --test acceptance`.
