pub mod coeff;
pub mod daha;
pub mod ehall;
pub mod hecke;
pub mod verify;
pub mod words;
