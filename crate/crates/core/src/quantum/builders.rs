//! Reversible circuits for the `F_2` linear-algebra primitives.
//!
//! Inputs are left intact and results are XORed into clean output wires,
//! so every circuit is its own inverse.

use super::{Circuit, Gate};

fn push(c: &mut Circuit, g: Gate) {
    c.push(g).expect("builder wires are valid");
}

/// `|b>|b'>|0> -> |b>|b'>|b ⊕ b' ⊕ 1>`: two CNOTs onto the target, then X.
pub fn build_equality_circuit() -> Circuit {
    let mut c = Circuit::new(3);
    push(&mut c, Gate::Cnot { control: 0, target: 2 });
    push(&mut c, Gate::Cnot { control: 1, target: 2 });
    push(&mut c, Gate::X { target: 2 });
    c
}

/// `|a>|b>|0> -> |a>|b>|<a, b>>` with `a` on wires `0..n`, `b` on `n..2n`
/// and the result on wire `2n`; one Toffoli per coordinate.
pub fn build_inner_product_circuit(n: usize) -> Circuit {
    assert!(n >= 1);
    let mut c = Circuit::new(2 * n + 1);
    for i in 0..n {
        push(&mut c, Gate::Toffoli { controls: [i, n + i], target: 2 * n });
    }
    c
}

/// `|A>|x>|0> -> |A>|x>|Ax>` with `A` row-major on wires `0..n^2`, `x` on
/// the next `n` wires and `Ax` on the last `n`; `n^2` Toffolis.
pub fn build_matvec_circuit(n: usize) -> Circuit {
    assert!(n >= 1);
    let x0 = n * n;
    let y0 = x0 + n;
    let mut c = Circuit::new(n * n + 2 * n);
    for i in 0..n {
        for j in 0..n {
            push(&mut c, Gate::Toffoli { controls: [i * n + j, x0 + j], target: y0 + i });
        }
    }
    c
}

/// `|A>|B>|0> -> |A>|B>|AB>` with all three `n x n` matrices row-major on
/// consecutive blocks of `n^2` wires; `n^3` Toffolis.
pub fn build_matmul_circuit(n: usize) -> Circuit {
    assert!(n >= 1);
    let nn = n * n;
    let mut c = Circuit::new(3 * nn);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                push(&mut c, Gate::Toffoli { controls: [i * n + l, nn + l * n + j], target: 2 * nn + i * n + j });
            }
        }
    }
    c
}
