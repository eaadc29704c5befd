pub mod cli;
pub mod dual;
pub mod dual_horo;
pub mod error;
pub mod extended;
pub mod garside;
pub mod growth;
pub mod horo;
pub mod oracle;
pub mod series;
pub mod words;
