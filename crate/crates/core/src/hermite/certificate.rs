use num_bigint::BigInt;
use serde::ser::SerializeStruct;

use crate::exact::rational::{fmt_rational, Rational};
use crate::numerics::ball::ComplexBall;

/// One prime's worth of evidence that an exponential sum is bounded away
/// from zero.
///
/// For the π-machine `critical` is `C(p)`, `tail` is `B(p)` and `f0` is
/// `F_p(0)`. For the LW-machine `critical` is `S(p)`, and `tail`, `f0` are the
/// integral bound and `|e^{-β_j} F_{p,j}(β_j)|` bound of the index `j` that
/// gave the bound.
#[derive(Clone, Debug)]
pub struct HermiteCertificate {
    pub machine: serde_json::Value,
    pub p: u64,
    pub critical: BigInt,
    pub residue_ok: bool,
    pub tail: Rational,
    pub f0: Rational,
    /// Present only when `|critical| > tail > 0`.
    pub lower_bound: Option<Rational>,
    /// Direct enclosure of the exponential sum.
    pub enclosure: ComplexBall,
    pub precision_bits: u32,
    pub j: Option<usize>,
}

impl serde::Serialize for HermiteCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HermiteCertificate", 10)?;
        st.serialize_field("machine", &self.machine)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("C", &self.critical.to_string())?;
        st.serialize_field("residue_ok", &self.residue_ok)?;
        st.serialize_field("B", &fmt_rational(&self.tail))?;
        st.serialize_field("F0", &fmt_rational(&self.f0))?;
        st.serialize_field("lower_bound", &self.lower_bound.as_ref().map(fmt_rational))?;
        st.serialize_field("enclosure", &self.enclosure)?;
        st.serialize_field("precision_bits", &self.precision_bits)?;
        if let Some(j) = self.j {
            st.serialize_field("j", &j)?;
        } else {
            st.skip_field("j")?;
        }
        st.end()
    }
}

/// Largest bound, ties to the smallest prime.
pub fn best(certs: &[HermiteCertificate]) -> Option<&HermiteCertificate> {
    let mut out: Option<&HermiteCertificate> = None;
    for c in certs {
        let Some(b) = &c.lower_bound else { continue };
        match out {
            Some(o) if o.lower_bound.as_ref().unwrap() > b => {}
            Some(o) if o.lower_bound.as_ref().unwrap() == b && o.p <= c.p => {}
            _ => out = Some(c),
        }
    }
    out
}
