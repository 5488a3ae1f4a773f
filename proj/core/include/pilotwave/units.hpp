#pragma once

// Internal unit system: lengths in nm, times in fs, energies in eV.
// Everything downstream of config parsing works in these units only.

namespace pilotwave::units {

// hbar in eV*fs (CODATA).
inline constexpr double hbar = 0.6582119569;

// Free electron mass in eV*fs^2/nm^2  (m_e c^2 / c^2 with c = 299.792458 nm/fs).
inline constexpr double m0 = 5.68563;

// External configs quote the trap constants F, C in eV/m^2; internally we
// keep eV/nm^2.
inline constexpr double ev_per_m2_to_ev_per_nm2 = 1e-18;

} // namespace pilotwave::units
