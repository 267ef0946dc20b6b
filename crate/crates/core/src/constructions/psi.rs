//! Explicit twist words for ψ1, ψ2, ψ3 and φ_n.
//!
//! Each ψ_i is supported on the chain A1..A5 together with a2, so it fixes
//! a_g and a'_g for every g ≥ 3. The words were found by a breadth-first
//! search over short products and are re-checked by the test suite.

/// ψ1(A1) = a2.
pub const PSI1: [(&str, i32); 8] =
    [("A4", -1), ("a2", -1), ("A3", -1), ("A4", -1), ("A2", -1), ("A3", -1), ("A1", -1), ("A2", -1)];

/// ψ2(A1) = e1 = a1 a3^-1.
pub const PSI2: [(&str, i32); 8] =
    [("A2", -1), ("A3", -1), ("A4", -1), ("A5", -1), ("a2", 1), ("A4", 1), ("A3", 1), ("A2", 1)];

/// ψ3(A1) = e2 = a1 a3 a2^-1.
pub const PSI3: [(&str, i32); 8] =
    [("A2", 1), ("A1", 1), ("A4", 1), ("A5", 1), ("a2", -1), ("A4", -1), ("A3", 1), ("A2", 1)];

/// The lantern's interior curves as words, used to cross-check ψ2 and ψ3.
pub const E1_LETTERS: [i32; 2] = [1, -5];
pub const E2_LETTERS: [i32; 3] = [1, 5, -3];
