//! Reversible netlists built from CNOT and Toffoli gates.
//!
//! Swaps are never stored as gates. A circuit carries a logical→physical
//! wire map instead: builders address logical wires, gates are stored on
//! physical wires, and relabeling only rewrites the map.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("gate uses wire {0} more than once")]
    DuplicateIndex(usize),
    #[error("wire {index} out of range for {qubits} qubits")]
    IndexOutOfRange { index: usize, qubits: usize },
    #[error("not a permutation of {0} wires")]
    NotAPermutation(usize),
    #[error("state has {got} bits, circuit has {expected} qubits")]
    LengthMismatch { expected: usize, got: usize },
    #[error("netlist line {line}: {message}")]
    Netlist { line: usize, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    /// `target ^= control`
    Cnot { control: usize, target: usize },
    /// `target ^= controls[0] & controls[1]`
    Toffoli { controls: [usize; 2], target: usize },
}

impl Gate {
    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::Cnot { control, target }
    }

    pub fn toffoli(a: usize, b: usize, target: usize) -> Self {
        Gate::Toffoli { controls: [a, b], target }
    }

    pub fn wires(&self) -> impl Iterator<Item = usize> {
        let (arr, len) = match *self {
            Gate::Cnot { control, target } => ([control, target, 0], 2),
            Gate::Toffoli { controls: [a, b], target } => ([a, b, target], 3),
        };
        arr.into_iter().take(len)
    }

    pub fn target(&self) -> usize {
        match *self {
            Gate::Cnot { target, .. } | Gate::Toffoli { target, .. } => target,
        }
    }

    fn map(self, f: impl Fn(usize) -> usize) -> Gate {
        match self {
            Gate::Cnot { control, target } => Gate::cnot(f(control), f(target)),
            Gate::Toffoli { controls: [a, b], target } => Gate::toffoli(f(a), f(b), f(target)),
        }
    }

    fn validate(&self, qubits: usize) -> Result<(), CircuitError> {
        let wires: Vec<usize> = self.wires().collect();
        for (i, &w) in wires.iter().enumerate() {
            if w >= qubits {
                return Err(CircuitError::IndexOutOfRange { index: w, qubits });
            }
            if wires[..i].contains(&w) {
                return Err(CircuitError::DuplicateIndex(w));
            }
        }
        Ok(())
    }
}

/// Gate counts plus the greedy depth estimate for a circuit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateStats {
    pub cnot_count: usize,
    pub tof_count: usize,
    pub depth_greedy: usize,
    pub qubits: usize,
    pub final_perm: Vec<usize>,
}

impl GateStats {
    pub fn gate_count(&self) -> usize {
        self.cnot_count + self.tof_count
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    qubits: usize,
    gates: Vec<Gate>,
    wiremap: Vec<usize>,
}

impl Circuit {
    pub fn new(qubits: usize) -> Self {
        Circuit { qubits, gates: Vec::new(), wiremap: (0..qubits).collect() }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    /// Stored gates, on physical wires.
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// `wiremap()[i]` is the physical wire currently holding logical wire `i`.
    pub fn wiremap(&self) -> &[usize] {
        &self.wiremap
    }

    pub fn physical(&self, logical: usize) -> usize {
        self.wiremap[logical]
    }

    /// Appends a gate given on logical wires.
    pub fn append_gate(&mut self, gate: Gate) -> Result<(), CircuitError> {
        gate.validate(self.qubits)?;
        self.gates.push(gate.map(|w| self.wiremap[w]));
        Ok(())
    }

    /// Builder shorthand for [`Circuit::append_gate`] with a CNOT.
    ///
    /// # Panics
    /// Panics on an invalid gate; builders only pass indices they computed.
    pub fn cnot(&mut self, control: usize, target: usize) {
        self.append_gate(Gate::cnot(control, target)).expect("invalid CNOT");
    }

    /// Builder shorthand for [`Circuit::append_gate`] with a Toffoli.
    ///
    /// # Panics
    /// Panics on an invalid gate.
    pub fn toffoli(&mut self, a: usize, b: usize, target: usize) {
        self.append_gate(Gate::toffoli(a, b, target)).expect("invalid Toffoli");
    }

    /// Renames wires at zero gate cost: afterwards logical wire `i` is the
    /// wire that was called `perm[i]` before.
    pub fn relabel(&mut self, perm: &[usize]) -> Result<(), CircuitError> {
        if !is_permutation(perm, self.qubits) {
            return Err(CircuitError::NotAPermutation(self.qubits));
        }
        self.wiremap = perm.iter().map(|&p| self.wiremap[p]).collect();
        Ok(())
    }

    /// [`Circuit::relabel`] restricted to a subset of wires: logical
    /// `wires[i]` becomes the wire previously called `wires[perm[i]]`.
    pub fn relabel_wires(&mut self, wires: &[usize], perm: &[usize]) -> Result<(), CircuitError> {
        if !is_permutation(perm, wires.len()) {
            return Err(CircuitError::NotAPermutation(wires.len()));
        }
        let old: Vec<usize> = wires.iter().map(|&w| self.wiremap[w]).collect();
        for (i, &w) in wires.iter().enumerate() {
            self.wiremap[w] = old[perm[i]];
        }
        Ok(())
    }

    /// Appends `sub` with its logical wire `j` bound to our logical
    /// `wires[j]`, including its final relabeling.
    pub fn append_circuit(&mut self, sub: &Circuit, wires: &[usize]) -> Result<(), CircuitError> {
        if wires.len() != sub.qubits {
            return Err(CircuitError::LengthMismatch { expected: sub.qubits, got: wires.len() });
        }
        let mut seen = vec![false; self.qubits];
        for &w in wires {
            if w >= self.qubits {
                return Err(CircuitError::IndexOutOfRange { index: w, qubits: self.qubits });
            }
            if std::mem::replace(&mut seen[w], true) {
                return Err(CircuitError::DuplicateIndex(w));
            }
        }
        // sub starts with an identity map, so its physical j is our logical wires[j].
        let phys: Vec<usize> = wires.iter().map(|&w| self.wiremap[w]).collect();
        self.gates.extend(sub.gates.iter().map(|g| g.map(|q| phys[q])));
        self.relabel_wires(wires, &sub.wiremap)
    }

    /// The inverse circuit: gates in reverse order, wire map inverted.
    pub fn inverted(&self) -> Circuit {
        let inv = invert_permutation(&self.wiremap);
        Circuit {
            qubits: self.qubits,
            gates: self.gates.iter().rev().map(|g| g.map(|q| inv[q])).collect(),
            wiremap: inv,
        }
    }

    /// Evaluates the circuit on a classical input given in logical order and
    /// returns the output in logical order.
    pub fn simulate(&self, state: &[bool]) -> Result<Vec<bool>, CircuitError> {
        if state.len() != self.qubits {
            return Err(CircuitError::LengthMismatch { expected: self.qubits, got: state.len() });
        }
        let mut s = state.to_vec();
        for g in &self.gates {
            match *g {
                Gate::Cnot { control, target } => s[target] ^= s[control],
                Gate::Toffoli { controls: [a, b], target } => s[target] ^= s[a] & s[b],
            }
        }
        Ok(self.wiremap.iter().map(|&p| s[p]).collect())
    }

    /// Bit-sliced evaluation of 64 independent inputs at once: bit `l` of
    /// `lanes[i]` is wire `i` of input `l`.
    pub fn simulate_lanes(&self, lanes: &[u64]) -> Result<Vec<u64>, CircuitError> {
        if lanes.len() != self.qubits {
            return Err(CircuitError::LengthMismatch { expected: self.qubits, got: lanes.len() });
        }
        let mut s = lanes.to_vec();
        for g in &self.gates {
            match *g {
                Gate::Cnot { control, target } => s[target] ^= s[control],
                Gate::Toffoli { controls: [a, b], target } => s[target] ^= s[a] & s[b],
            }
        }
        Ok(self.wiremap.iter().map(|&p| s[p]).collect())
    }

    /// Counts plus greedy depth. The depth scan keeps a frontier of
    /// wire-disjoint gates; a gate touching the frontier opens a new layer
    /// and becomes the whole frontier, otherwise it joins it.
    pub fn stats(&self) -> GateStats {
        let mut cnot_count = 0;
        let mut tof_count = 0;
        let mut layer_of = vec![0usize; self.qubits];
        let mut depth = 0usize;
        for g in &self.gates {
            match g {
                Gate::Cnot { .. } => cnot_count += 1,
                Gate::Toffoli { .. } => tof_count += 1,
            }
            if depth == 0 || g.wires().any(|w| layer_of[w] == depth) {
                depth += 1;
            }
            for w in g.wires() {
                layer_of[w] = depth;
            }
        }
        GateStats {
            cnot_count,
            tof_count,
            depth_greedy: depth,
            qubits: self.qubits,
            final_perm: self.wiremap.clone(),
        }
    }

    /// Largest number of gates touching any single wire; a lower bound on
    /// any layering's depth.
    pub fn max_wire_incidence(&self) -> usize {
        let mut counts = vec![0usize; self.qubits];
        for g in &self.gates {
            for w in g.wires() {
                counts[w] += 1;
            }
        }
        counts.into_iter().max().unwrap_or(0)
    }

    /// Netlist text: `qubits N`, `perm p0 .. p{N-1}`, then one gate per line.
    pub fn to_netlist(&self) -> String {
        let mut out = String::with_capacity(16 * self.gates.len() + 32);
        let _ = writeln!(out, "qubits {}", self.qubits);
        out.push_str("perm");
        for p in &self.wiremap {
            let _ = write!(out, " {p}");
        }
        out.push('\n');
        for g in &self.gates {
            let _ = match *g {
                Gate::Cnot { control, target } => writeln!(out, "CNOT {control} {target}"),
                Gate::Toffoli { controls: [a, b], target } => writeln!(out, "TOF {a} {b} {target}"),
            };
        }
        out
    }

    pub fn parse_netlist(text: &str) -> Result<Circuit, CircuitError> {
        let err = |line: usize, message: String| CircuitError::Netlist { line, message };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

        let (ln, first) = lines.next().ok_or_else(|| err(1, "missing qubits line".into()))?;
        let qubits = match first.split(' ').collect::<Vec<_>>()[..] {
            ["qubits", n] => n.parse::<usize>().map_err(|_| err(ln, format!("bad qubit count {n:?}")))?,
            _ => return Err(err(ln, "expected `qubits N`".into())),
        };

        let (ln, second) = lines.next().ok_or_else(|| err(2, "missing perm line".into()))?;
        let mut parts = second.split(' ');
        if parts.next() != Some("perm") {
            return Err(err(ln, "expected `perm p0 .. pN-1`".into()));
        }
        let wiremap = parts
            .filter(|p| !(qubits == 0 && p.is_empty()))
            .map(|p| p.parse::<usize>().map_err(|_| err(ln, format!("bad index {p:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if !is_permutation(&wiremap, qubits) {
            return Err(err(ln, format!("not a permutation of {qubits} wires")));
        }

        let mut gates = Vec::new();
        for (ln, line) in lines {
            let toks: Vec<&str> = line.split(' ').collect();
            let idx = |t: &str| t.parse::<usize>().map_err(|_| err(ln, format!("bad index {t:?}")));
            let gate = match toks[..] {
                ["CNOT", c, t] => Gate::cnot(idx(c)?, idx(t)?),
                ["TOF", a, b, t] => Gate::toffoli(idx(a)?, idx(b)?, idx(t)?),
                _ => return Err(err(ln, format!("malformed gate {line:?}"))),
            };
            gate.validate(qubits).map_err(|e| err(ln, e.to_string()))?;
            gates.push(gate);
        }
        Ok(Circuit { qubits, gates, wiremap })
    }

    /// OpenQASM 2.0 listing with the final wire map as a trailing comment.
    pub fn to_qasm(&self) -> String {
        let mut out = String::with_capacity(24 * self.gates.len() + 64);
        out.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
        let _ = writeln!(out, "qreg q[{}];", self.qubits);
        for g in &self.gates {
            let _ = match *g {
                Gate::Cnot { control, target } => writeln!(out, "cx q[{control}], q[{target}];"),
                Gate::Toffoli { controls: [a, b], target } => {
                    writeln!(out, "ccx q[{a}], q[{b}], q[{target}];")
                }
            };
        }
        out.push_str("// perm");
        for p in &self.wiremap {
            let _ = write!(out, " {p}");
        }
        out.push('\n');
        out
    }
}

pub fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    perm.iter().all(|&p| p < n && !std::mem::replace(&mut seen[p], true))
}

pub fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}
