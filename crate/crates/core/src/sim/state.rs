use super::poly::CostPolynomial;
use super::SimError;
use num_complex::Complex64;
use std::io::Write;

/// Default qubit cap: 2^26 amplitudes are 1 GiB of complex doubles.
pub const DEFAULT_MAX_QUBITS: usize = 26;

/// A dense state over `num_qubits` qubits: `2^n` complex amplitudes with
/// qubit 0 as the least significant index bit.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The all-zero computational basis state, subject to the default cap.
    pub fn zero_state(num_qubits: usize) -> Result<Self, SimError> {
        Self::zero_state_with_cap(num_qubits, DEFAULT_MAX_QUBITS)
    }

    pub fn zero_state_with_cap(num_qubits: usize, cap: usize) -> Result<Self, SimError> {
        Self::basis_state_with_cap(num_qubits, 0, cap)
    }

    /// A computational basis state |index>.
    pub fn basis_state(num_qubits: usize, index: usize) -> Result<Self, SimError> {
        Self::basis_state_with_cap(num_qubits, index, DEFAULT_MAX_QUBITS)
    }

    pub fn basis_state_with_cap(
        num_qubits: usize,
        index: usize,
        cap: usize,
    ) -> Result<Self, SimError> {
        if num_qubits > cap {
            return Err(SimError::QubitCapExceeded {
                requested: num_qubits,
                cap,
            });
        }
        let dim = 1usize << num_qubits;
        assert!(index < dim, "basis index out of range");
        let mut amps = vec![Complex64::ZERO; dim];
        amps[index] = Complex64::ONE;
        Ok(StateVector { num_qubits, amps })
    }

    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self, SimError> {
        let len = amps.len();
        if !len.is_power_of_two() {
            return Err(SimError::BadAmplitudeCount { len });
        }
        Ok(StateVector {
            num_qubits: len.trailing_zeros() as usize,
            amps,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn set_amplitude(&mut self, index: usize, value: Complex64) {
        self.amps[index] = value;
    }

    pub fn probability(&self, index: usize) -> f64 {
        self.amps[index].norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn inner(&self, other: &StateVector) -> Complex64 {
        assert_eq!(self.num_qubits, other.num_qubits);
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn fidelity(&self, other: &StateVector) -> f64 {
        self.inner(other).norm_sqr()
    }

    fn check_qubit(&self, qubit: usize) -> Result<(), SimError> {
        if qubit >= self.num_qubits {
            return Err(SimError::QubitOutOfRange {
                qubit,
                num_qubits: self.num_qubits,
            });
        }
        Ok(())
    }

    /// Pauli-X on one qubit.
    pub fn apply_x(&mut self, qubit: usize) -> Result<(), SimError> {
        self.check_qubit(qubit)?;
        let bit = 1usize << qubit;
        for idx in 0..self.amps.len() {
            if idx & bit == 0 {
                self.amps.swap(idx, idx | bit);
            }
        }
        Ok(())
    }

    /// Continuous swap between two qubits: identity on the |00>, |11>
    /// subspace; on span{|q1 q2> = |01>, |10>} the real rotation
    ///
    /// ```text
    /// [ cos(theta/2)  -sin(theta/2) ]
    /// [ sin(theta/2)   cos(theta/2) ]
    /// ```
    ///
    /// so for positive angles amplitude flows from `q2` towards `q1`.
    /// At theta = pi this is a full swap of the pair.
    pub fn apply_xxyy(&mut self, theta: f64, q1: usize, q2: usize) -> Result<(), SimError> {
        self.check_qubit(q1)?;
        self.check_qubit(q2)?;
        if q1 == q2 {
            return Err(SimError::DuplicateQubit);
        }
        let c = (theta / 2.0).cos();
        let s = (theta / 2.0).sin();
        let b1 = 1usize << q1;
        let b2 = 1usize << q2;
        for idx in 0..self.amps.len() {
            // visit each {|01>, |10>} pair once, from its |01> member
            if idx & b1 == 0 && idx & b2 != 0 {
                let i01 = idx;
                let i10 = (idx & !b2) | b1;
                let a01 = self.amps[i01];
                let a10 = self.amps[i10];
                self.amps[i01] = c * a01 - s * a10;
                self.amps[i10] = s * a01 + c * a10;
            }
        }
        Ok(())
    }

    /// Swaps qubits `a` and `b` on the subspace where `control` is 1.
    pub fn apply_cswap(&mut self, control: usize, a: usize, b: usize) -> Result<(), SimError> {
        self.check_qubit(control)?;
        self.check_qubit(a)?;
        self.check_qubit(b)?;
        if control == a || control == b || a == b {
            return Err(SimError::DuplicateQubit);
        }
        let bc = 1usize << control;
        let ba = 1usize << a;
        let bb = 1usize << b;
        for idx in 0..self.amps.len() {
            if idx & bc != 0 && idx & ba != 0 && idx & bb == 0 {
                self.amps.swap(idx, (idx & !ba) | bb);
            }
        }
        Ok(())
    }

    /// Multiplies by `e^{i phi}` the amplitude of every basis state whose
    /// listed qubits are all 0.
    pub fn apply_mcp0(&mut self, qubits: &[usize], phi: f64) -> Result<(), SimError> {
        if qubits.is_empty() {
            return Err(SimError::EmptyQubitSet);
        }
        let mut mask = 0usize;
        for &q in qubits {
            self.check_qubit(q)?;
            mask |= 1usize << q;
        }
        let phase = Complex64::from_polar(1.0, phi);
        for (idx, amp) in self.amps.iter_mut().enumerate() {
            if idx & mask == 0 {
                *amp *= phase;
            }
        }
        Ok(())
    }

    /// Imprints `e^{-i gamma * poly(x)}` on every basis state |x>, evaluating
    /// the multilinear polynomial per index. No gate decomposition: at desk
    /// scale the diagonal pass is exact and cheap.
    pub fn apply_diagonal_phase(
        &mut self,
        poly: &CostPolynomial,
        gamma: f64,
    ) -> Result<(), SimError> {
        if let Some(variable) = poly.max_variable() {
            if variable >= self.num_qubits {
                return Err(SimError::VariableOutOfRange {
                    variable,
                    num_qubits: self.num_qubits,
                });
            }
        }
        for (idx, amp) in self.amps.iter_mut().enumerate() {
            let value = poly.evaluate_bits(idx);
            *amp *= Complex64::from_polar(1.0, -gamma * value);
        }
        Ok(())
    }

    /// Debug dump `index,re,im`, limited to small states.
    pub fn dump_csv(&self, mut out: impl Write) -> Result<(), SimError> {
        if self.num_qubits > 12 {
            return Err(SimError::DumpTooLarge(self.num_qubits));
        }
        writeln!(out, "index,re,im").map_err(|_| SimError::DumpTooLarge(self.num_qubits))?;
        for (idx, amp) in self.amps.iter().enumerate() {
            writeln!(out, "{},{},{}", idx, amp.re, amp.im)
                .map_err(|_| SimError::DumpTooLarge(self.num_qubits))?;
        }
        Ok(())
    }
}
