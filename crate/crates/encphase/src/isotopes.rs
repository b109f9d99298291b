//! Registry of stable, finite-spin group-IV nuclides and the contact-density
//! to hyperfine-energy conversion.
//!
//! The built-in table carries nuclear spin, natural abundance, gyromagnetic
//! ratio relative to 29Si, atomic radius relative to Si, melting-point
//! solubility coefficient, and (where computed) the bunching factor eta.
//! A plain-text override file can amend rows or add new nuclides without a
//! rebuild; see [`IsotopeRegistry::apply_override_file`].

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constants::{self, PhysicalConstants};
use crate::error::{Error, Result};

/// Nuclear spin stored as a count of half units (1 -> spin 1/2, 9 -> spin 9/2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct NuclearSpin(pub u32);

impl NuclearSpin {
    pub const ONE_HALF: NuclearSpin = NuclearSpin(1);
    pub const NINE_HALVES: NuclearSpin = NuclearSpin(9);

    /// Spin value as a float (e.g. 0.5, 4.5).
    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for NuclearSpin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.0)
    }
}

impl FromStr for NuclearSpin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| Error::InvalidParameter(format!("spin `{s}` is not of the form n/2")))?;
        if den.trim() != "2" {
            return Err(Error::InvalidParameter(format!(
                "spin `{s}` must have denominator 2"
            )));
        }
        let halves: u32 = num
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad spin numerator in `{s}`")))?;
        if halves == 0 {
            return Err(Error::InvalidParameter("spin must be positive".into()));
        }
        Ok(NuclearSpin(halves))
    }
}

impl Serialize for NuclearSpin {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for NuclearSpin {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One registry row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsotopeSpec {
    /// Nuclide label, e.g. "119Sn".
    pub symbol: String,
    /// Nuclear spin I.
    pub nuclear_spin: NuclearSpin,
    /// Natural isotopic abundance, percent.
    pub abundance_pct: f64,
    /// |gamma_X / gamma_Si| (dimensionless).
    pub gyro_ratio_rel_si: f64,
    /// Atomic radius relative to Si (dimensionless).
    pub atomic_radius_rel_si: f64,
    /// Melting-point distribution coefficient in silicon; `None` for negligible.
    pub solubility_k: Option<f64>,
    /// Atomic number Z.
    pub atomic_number: u32,
    /// Mass number A of the nuclide.
    pub mass_number: u32,
    /// Principal quantum number of the outermost s shell.
    pub valence_n: u32,
    /// Bunching factor eta; `None` when no computed value is registered.
    pub eta: Option<f64>,
}

impl IsotopeSpec {
    /// Nuclear gyromagnetic ratio as a frequency per field, Hz/T.
    pub fn nuclear_gyro(&self, constants: &PhysicalConstants) -> f64 {
        self.gyro_ratio_rel_si * constants.si_29_gyro
    }

    /// Bunching factor, or an error naming the nuclide.
    pub fn eta(&self) -> Result<f64> {
        self.eta.ok_or_else(|| Error::MissingEta {
            symbol: self.symbol.clone(),
        })
    }

    fn validate(&self) -> Result<()> {
        if self.abundance_pct <= 0.0 || self.abundance_pct > 100.0 {
            return Err(Error::InvalidParameter(format!(
                "{}: abundance {} % out of (0, 100]",
                self.symbol, self.abundance_pct
            )));
        }
        if self.gyro_ratio_rel_si <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "{}: gyromagnetic ratio must be positive",
                self.symbol
            )));
        }
        Ok(())
    }
}

struct Row {
    symbol: &'static str,
    spin_halves: u32,
    abundance_pct: f64,
    gyro: f64,
    radius: f64,
    solubility: Option<f64>,
    z: u32,
    a: u32,
    n: u32,
    eta: Option<f64>,
}

/// Built-in table of stable, finite-spin group-IV nuclides.
const BUILTIN: [Row; 7] = [
    Row { symbol: "13C",   spin_halves: 1, abundance_pct: 1.07,  gyro: 1.26, radius: 0.64, solubility: Some(5.7),   z: 6,  a: 13,  n: 2, eta: None },
    Row { symbol: "29Si",  spin_halves: 1, abundance_pct: 4.69,  gyro: 1.00, radius: 1.00, solubility: Some(1.0),   z: 14, a: 29,  n: 3, eta: Some(constants::ETA_SI_WILSON) },
    Row { symbol: "73Ge",  spin_halves: 9, abundance_pct: 7.75,  gyro: 1.49, radius: 1.14, solubility: Some(0.33),  z: 32, a: 73,  n: 4, eta: Some(constants::ETA_GE) },
    Row { symbol: "115Sn", spin_halves: 1, abundance_pct: 0.34,  gyro: 1.65, radius: 1.32, solubility: Some(0.016), z: 50, a: 115, n: 5, eta: Some(constants::ETA_SN) },
    Row { symbol: "117Sn", spin_halves: 1, abundance_pct: 7.68,  gyro: 1.81, radius: 1.32, solubility: Some(0.016), z: 50, a: 117, n: 5, eta: Some(constants::ETA_SN) },
    Row { symbol: "119Sn", spin_halves: 1, abundance_pct: 8.59,  gyro: 1.89, radius: 1.32, solubility: Some(0.016), z: 50, a: 119, n: 5, eta: Some(constants::ETA_SN) },
    Row { symbol: "207Pb", spin_halves: 1, abundance_pct: 22.1,  gyro: 1.07, radius: 1.64, solubility: None,        z: 82, a: 207, n: 6, eta: None },
];

/// Immutable nuclide registry; safe to share across workers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsotopeRegistry {
    isotope: BTreeMap<String, IsotopeSpec>,
}

/// Override-file entry: every field optional for amendments; new nuclides
/// must carry spin, abundance, gyro ratio, radius, Z, A and n.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct OverrideEntry {
    nuclear_spin: Option<NuclearSpin>,
    abundance_pct: Option<f64>,
    gyro_ratio_rel_si: Option<f64>,
    atomic_radius_rel_si: Option<f64>,
    solubility_k: Option<f64>,
    atomic_number: Option<u32>,
    mass_number: Option<u32>,
    valence_n: Option<u32>,
    eta: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OverrideFile {
    isotope: BTreeMap<String, OverrideEntry>,
}

impl IsotopeRegistry {
    /// Registry preloaded with the seven built-in rows.
    pub fn builtin() -> Self {
        let isotope = BUILTIN
            .iter()
            .map(|r| {
                (
                    r.symbol.to_string(),
                    IsotopeSpec {
                        symbol: r.symbol.to_string(),
                        nuclear_spin: NuclearSpin(r.spin_halves),
                        abundance_pct: r.abundance_pct,
                        gyro_ratio_rel_si: r.gyro,
                        atomic_radius_rel_si: r.radius,
                        solubility_k: r.solubility,
                        atomic_number: r.z,
                        mass_number: r.a,
                        valence_n: r.n,
                        eta: r.eta,
                    },
                )
            })
            .collect();
        Self { isotope }
    }

    /// Look up a nuclide by symbol.
    pub fn lookup(&self, symbol: &str) -> Result<&IsotopeSpec> {
        self.isotope.get(symbol).ok_or_else(|| Error::UnknownIsotope {
            symbol: symbol.to_string(),
            available: self.isotope.keys().cloned().collect::<Vec<_>>().join(", "),
        })
    }

    /// Iterate rows in symbol order.
    pub fn iter(&self) -> impl Iterator<Item = &IsotopeSpec> {
        self.isotope.values()
    }

    /// Merge a TOML override file: `[isotope."119Sn"]` sections with
    /// `key = value` lines. Existing rows are amended field by field; new
    /// nuclides require the full field set.
    pub fn apply_override_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        self.apply_override_str(&text)
    }

    /// Same as [`Self::apply_override_file`] but from a string.
    pub fn apply_override_str(&mut self, text: &str) -> Result<()> {
        let file: OverrideFile =
            toml::from_str(text).map_err(|e| Error::Config(format!("registry override: {e}")))?;
        for (symbol, entry) in file.isotope {
            match self.isotope.get_mut(&symbol) {
                Some(spec) => {
                    if let Some(v) = entry.nuclear_spin {
                        spec.nuclear_spin = v;
                    }
                    if let Some(v) = entry.abundance_pct {
                        spec.abundance_pct = v;
                    }
                    if let Some(v) = entry.gyro_ratio_rel_si {
                        spec.gyro_ratio_rel_si = v;
                    }
                    if let Some(v) = entry.atomic_radius_rel_si {
                        spec.atomic_radius_rel_si = v;
                    }
                    if let Some(v) = entry.solubility_k {
                        spec.solubility_k = Some(v);
                    }
                    if let Some(v) = entry.atomic_number {
                        spec.atomic_number = v;
                    }
                    if let Some(v) = entry.mass_number {
                        spec.mass_number = v;
                    }
                    if let Some(v) = entry.valence_n {
                        spec.valence_n = v;
                    }
                    if let Some(v) = entry.eta {
                        spec.eta = Some(v);
                    }
                    spec.validate()?;
                }
                None => {
                    let spec = IsotopeSpec {
                        symbol: symbol.clone(),
                        nuclear_spin: entry.nuclear_spin.ok_or_else(|| {
                            Error::Config(format!("new nuclide {symbol}: nuclear_spin required"))
                        })?,
                        abundance_pct: entry.abundance_pct.ok_or_else(|| {
                            Error::Config(format!("new nuclide {symbol}: abundance_pct required"))
                        })?,
                        gyro_ratio_rel_si: entry.gyro_ratio_rel_si.ok_or_else(|| {
                            Error::Config(format!(
                                "new nuclide {symbol}: gyro_ratio_rel_si required"
                            ))
                        })?,
                        atomic_radius_rel_si: entry.atomic_radius_rel_si.ok_or_else(|| {
                            Error::Config(format!(
                                "new nuclide {symbol}: atomic_radius_rel_si required"
                            ))
                        })?,
                        solubility_k: entry.solubility_k,
                        atomic_number: entry.atomic_number.ok_or_else(|| {
                            Error::Config(format!("new nuclide {symbol}: atomic_number required"))
                        })?,
                        mass_number: entry.mass_number.ok_or_else(|| {
                            Error::Config(format!("new nuclide {symbol}: mass_number required"))
                        })?,
                        valence_n: entry.valence_n.ok_or_else(|| {
                            Error::Config(format!("new nuclide {symbol}: valence_n required"))
                        })?,
                        eta: entry.eta,
                    };
                    spec.validate()?;
                    self.isotope.insert(symbol, spec);
                }
            }
        }
        Ok(())
    }

    /// Serialize the registry as TOML.
    pub fn to_toml(&self) -> Result<String> {
        toml::to_string_pretty(self).map_err(|e| Error::Config(e.to_string()))
    }

    /// Parse a registry serialized with [`Self::to_toml`].
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }
}

impl Default for IsotopeRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

/// Hyperfine strength in both energy and frequency form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperfineStrength {
    /// Contact energy A, J.
    pub energy_j: f64,
    /// A/h, Hz.
    pub freq_hz: f64,
}

/// Convert an electron probability density at the nucleus into a contact
/// hyperfine strength.
///
/// The prefactor is `(2 mu0 / 3) * (gamma_e h) * (gamma_I h)` with both
/// gyromagnetic ratios in Hz/T, so the energy is linear in the density and
/// in the nuclide's relative gyromagnetic ratio.
pub fn contact_density_to_hyperfine(
    density: f64,
    isotope: &IsotopeSpec,
    constants: &PhysicalConstants,
) -> Result<HyperfineStrength> {
    if density < 0.0 {
        return Err(Error::NegativeDensity(density));
    }
    let gamma_n = isotope.nuclear_gyro(constants);
    let energy_j = (2.0 * constants.mu0 / 3.0)
        * (constants.electron_gyro * constants.planck_h)
        * (gamma_n * constants.planck_h)
        * density;
    Ok(HyperfineStrength {
        energy_j,
        freq_hz: energy_j / constants.planck_h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_table_rows() {
        let reg = IsotopeRegistry::builtin();
        let sn = reg.lookup("119Sn").unwrap();
        assert_eq!(sn.gyro_ratio_rel_si, 1.89);
        assert_eq!(sn.abundance_pct, 8.59);
        assert_eq!(sn.nuclear_spin, NuclearSpin::ONE_HALF);

        let si = reg.lookup("29Si").unwrap();
        assert_eq!(si.gyro_ratio_rel_si, 1.00);

        let ge = reg.lookup("73Ge").unwrap();
        assert_eq!(ge.nuclear_spin, NuclearSpin::NINE_HALVES);
        assert_eq!(ge.solubility_k, Some(0.33));
    }

    #[test]
    fn unknown_symbol_names_available_set() {
        let reg = IsotopeRegistry::builtin();
        let err = reg.lookup("31P").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("31P"));
        assert!(msg.contains("119Sn"));
        assert!(msg.contains("29Si"));
    }

    #[test]
    fn default_etas() {
        let reg = IsotopeRegistry::builtin();
        assert_eq!(reg.lookup("29Si").unwrap().eta, Some(178.0));
        assert_eq!(reg.lookup("73Ge").unwrap().eta, Some(570.0));
        assert_eq!(reg.lookup("119Sn").unwrap().eta, Some(996.4));
        assert!(reg.lookup("13C").unwrap().eta.is_none());
        assert!(reg.lookup("207Pb").unwrap().eta().is_err());
    }

    #[test]
    fn conversion_zero_and_linearity() {
        let c = PhysicalConstants::default();
        let reg = IsotopeRegistry::builtin();
        let sn = reg.lookup("119Sn").unwrap();

        let zero = contact_density_to_hyperfine(0.0, sn, &c).unwrap();
        assert_eq!(zero.energy_j, 0.0);
        assert_eq!(zero.freq_hz, 0.0);

        let a1 = contact_density_to_hyperfine(1.0e27, sn, &c).unwrap();
        let a2 = contact_density_to_hyperfine(2.0e27, sn, &c).unwrap();
        assert!((a2.energy_j / a1.energy_j - 2.0).abs() < 1e-14);

        assert!(contact_density_to_hyperfine(-1.0, sn, &c).is_err());
    }

    #[test]
    fn gyro_ratio_carries_through() {
        // Fixed density: A(119Sn) / A(29Si) equals the gyromagnetic column.
        let c = PhysicalConstants::default();
        let reg = IsotopeRegistry::builtin();
        let sn = reg.lookup("119Sn").unwrap();
        let si = reg.lookup("29Si").unwrap();
        let d = 3.0e26;
        let a_sn = contact_density_to_hyperfine(d, sn, &c).unwrap();
        let a_si = contact_density_to_hyperfine(d, si, &c).unwrap();
        assert!((a_sn.energy_j / a_si.energy_j - 1.89).abs() < 1e-12);
    }

    #[test]
    fn energy_frequency_consistent() {
        let c = PhysicalConstants::default();
        let reg = IsotopeRegistry::builtin();
        let sn = reg.lookup("119Sn").unwrap();
        let a = contact_density_to_hyperfine(3.17e26, sn, &c).unwrap();
        assert!((a.energy_j - a.freq_hz * c.planck_h).abs() <= f64::EPSILON * a.energy_j.abs());
    }

    #[test]
    fn registry_toml_round_trip_is_exact() {
        let reg = IsotopeRegistry::builtin();
        let text = reg.to_toml().unwrap();
        let back = IsotopeRegistry::from_toml(&text).unwrap();
        assert_eq!(reg, back);
    }

    #[test]
    fn override_amends_and_adds() {
        let mut reg = IsotopeRegistry::builtin();
        reg.apply_override_str(
            r#"
            # eta in units of the cell-average density
            [isotope."13C"]
            eta = 15.0

            [isotope."77Se"]
            nuclear_spin = "1/2"
            abundance_pct = 7.63
            gyro_ratio_rel_si = 0.96
            atomic_radius_rel_si = 1.03
            atomic_number = 34
            mass_number = 77
            valence_n = 4
            "#,
        )
        .unwrap();
        assert_eq!(reg.lookup("13C").unwrap().eta, Some(15.0));
        assert_eq!(reg.lookup("77Se").unwrap().atomic_number, 34);

        // Unknown keys are rejected.
        let mut reg2 = IsotopeRegistry::builtin();
        assert!(reg2
            .apply_override_str("[isotope.\"29Si\"]\nbogus_key = 1.0\n")
            .is_err());
    }
}
