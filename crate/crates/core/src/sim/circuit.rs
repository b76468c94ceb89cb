use super::poly::CostPolynomial;
use super::state::StateVector;
use super::SimError;
use std::fmt::Write as _;
use std::sync::Arc;

/// One gate record. Angles are radians.
#[derive(Clone, Debug)]
pub enum Gate {
    X(usize),
    /// Continuous swap; see [`StateVector::apply_xxyy`] for the matrix.
    XxPlusYy {
        theta: f64,
        q1: usize,
        q2: usize,
    },
    CSwap {
        control: usize,
        a: usize,
        b: usize,
    },
    /// Phase `e^{i phi}` on basis states whose listed qubits are all zero.
    Mcp0 {
        phi: f64,
        qubits: Vec<usize>,
    },
    /// Diagonal `e^{-i gamma * poly(x)}`.
    DiagonalPhase {
        gamma: f64,
        poly: Arc<CostPolynomial>,
    },
}

impl Gate {
    pub fn inverse(&self) -> Gate {
        match self {
            Gate::X(q) => Gate::X(*q),
            Gate::XxPlusYy { theta, q1, q2 } => Gate::XxPlusYy {
                theta: -theta,
                q1: *q1,
                q2: *q2,
            },
            Gate::CSwap { control, a, b } => Gate::CSwap {
                control: *control,
                a: *a,
                b: *b,
            },
            Gate::Mcp0 { phi, qubits } => Gate::Mcp0 {
                phi: -phi,
                qubits: qubits.clone(),
            },
            Gate::DiagonalPhase { gamma, poly } => Gate::DiagonalPhase {
                gamma: -gamma,
                poly: poly.clone(),
            },
        }
    }

    fn max_qubit(&self) -> usize {
        match self {
            Gate::X(q) => *q,
            Gate::XxPlusYy { q1, q2, .. } => (*q1).max(*q2),
            Gate::CSwap { control, a, b } => (*control).max(*a).max(*b),
            Gate::Mcp0 { qubits, .. } => qubits.iter().copied().max().unwrap_or(0),
            Gate::DiagonalPhase { poly, .. } => poly.max_variable().unwrap_or(0),
        }
    }
}

/// A circuit as an ordered gate list over a fixed qubit count.
#[derive(Clone, Debug, Default)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Circuit {
            num_qubits,
            gates: Vec::new(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) {
        debug_assert!(gate.max_qubit() < self.num_qubits);
        self.gates.push(gate);
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) {
        for gate in gates {
            self.push(gate);
        }
    }

    pub fn append(&mut self, other: &Circuit) {
        debug_assert_eq!(self.num_qubits, other.num_qubits);
        self.gates.extend_from_slice(&other.gates);
    }

    /// The formal inverse: reversed order with negated angles (X and CSwap
    /// are self-inverse).
    pub fn inverted(&self) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }

    /// Applies all gates in order.
    pub fn run(&self, state: &mut StateVector) -> Result<(), SimError> {
        if state.num_qubits() < self.num_qubits {
            return Err(SimError::WidthMismatch {
                circuit: self.num_qubits,
                state: state.num_qubits(),
            });
        }
        for gate in &self.gates {
            match gate {
                Gate::X(q) => state.apply_x(*q)?,
                Gate::XxPlusYy { theta, q1, q2 } => state.apply_xxyy(*theta, *q1, *q2)?,
                Gate::CSwap { control, a, b } => state.apply_cswap(*control, *a, *b)?,
                Gate::Mcp0 { phi, qubits } => state.apply_mcp0(qubits, *phi)?,
                Gate::DiagonalPhase { gamma, poly } => state.apply_diagonal_phase(poly, *gamma)?,
            }
        }
        Ok(())
    }

    /// Text netlist, one gate per line, for golden-file comparisons.
    pub fn netlist(&self) -> String {
        let mut out = String::new();
        for gate in &self.gates {
            match gate {
                Gate::X(q) => writeln!(out, "X {q}").unwrap(),
                Gate::XxPlusYy { theta, q1, q2 } => {
                    writeln!(out, "XXPLUSYY {theta} {q1} {q2}").unwrap()
                }
                Gate::CSwap { control, a, b } => writeln!(out, "CSWAP {control} {a} {b}").unwrap(),
                Gate::Mcp0 { phi, qubits } => {
                    let list = qubits
                        .iter()
                        .map(|q| q.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    writeln!(out, "MCP0 {phi} {list}").unwrap()
                }
                Gate::DiagonalPhase { gamma, .. } => writeln!(out, "DIAGPHASE {gamma}").unwrap(),
            }
        }
        out
    }
}
