pub mod w3c;
