//! Published verification fixtures: the RSA-240 and RSA-250 factorizations,
//! the 795-bit prime-field discrete logarithm, and the polynomial pairs used
//! for those computations.

use num_bigint::{BigInt, BigUint};
use std::str::FromStr;

use crate::ntkernel::PolyZ;

pub const RSA240: &str = "124620366781718784065835044608106590434820374651678805754818788883289666801188210855036039570272508747509864768438458621054865537970253930571891217684318286362846948405301614416430468066875699415246993185704183030512549594371372159029236099";
pub const RSA240_P: &str = "509435952285839914555051023580843714132648382024111473186660296521821206469746700620316443478873837606252372049619334517";
pub const RSA240_Q: &str = "244624208838318150567813139024002896653802092578931401452041221336558477095178155258218897735030590669041302045908071447";

pub const RSA250: &str = "2140324650240744961264423072839333563008614715144755017797754920881418023447140136643345519095804679610992851872470914587687396261921557363047454770520805119056493106687691590019759405693457452230589325976697471681738069364894699871578494975937497937";
pub const RSA250_P: &str = "64135289477071580278790190170577389084825014742943447208116859632024532344630238623598752668347708737661925585694639798853367";
pub const RSA250_Q: &str = "33372027594978156556226010605355114227940760344767554666784520987023841729210037080257448673296881877565718986258036932062711";

/// The 795-bit DLP modulus: smallest safe prime above RSA-240 (RSA-240 + 49204).
pub const DLP240_P: &str = "124620366781718784065835044608106590434820374651678805754818788883289666801188210855036039570272508747509864768438458621054865537970253930571891217684318286362846948405301614416430468066875699415246993185704183030512549594371372159029285303";
/// log_5 of the "magic words" target modulo DLP240_P.
pub const DLP240_LOG: &str = "92603135928144195363094955331732855502961099191437611616729420475898744562365366788100548099072093487548258752802923326447367244150096121629264809207598195062213366889859186681126928982506005127728321426751244111412371767375547225045851716";
pub const DLP240_BASE: u32 = 5;
/// The target whose log was published: big-endian ASCII of this sentence.
pub const DLP240_TARGET_ASCII: &str = "The magic words are still Squeamish Ossifrage";

pub fn dlp240_target() -> BigUint {
    BigUint::from_bytes_be(DLP240_TARGET_ASCII.as_bytes())
}

pub fn big(s: &str) -> BigUint {
    BigUint::from_str(s).unwrap()
}

fn poly(coeffs: &[&str]) -> PolyZ {
    PolyZ::new(coeffs.iter().map(|c| BigInt::from_str(c).unwrap()).collect())
}

/// The degree-(1,6) pair used for RSA-240; |Res(f0, f1)| = 120 N.
pub fn rsa240_pair() -> (PolyZ, PolyZ) {
    let f0 = poly(&["-105487753732969860223795041295860517380", "17780390513045005995253"]);
    let f1 = poly(&[
        "-221175588842299117590564542609977016567191860",
        "1595712553369335430496125795083146688523",
        "179200573533665721310210640738061170",
        "974448934853864807690675067037",
        "-6381744461279867941961670",
        "-4763683724115259920",
        "10853204947200",
    ]);
    (f0, f1)
}

/// The degree-(3,4) Joux-Lercier pair used for DLP-240; |Res(f0, f1)| = 540 p.
pub fn dlp240_pair() -> (PolyZ, PolyZ) {
    let f0 = poly(&[
        "-236610408827000256250190838220824122997878994595785432202599",
        "-18763697560013016564403953928327121035580409459944854652737",
        "24908820300715766136475115982439735516581888603817255539890",
        "286512172700675411986966846394359924874576536408786368056",
    ]);
    let f1 = poly(&["120", "62", "1", "126", "39"]);
    (f0, f1)
}

/// The degree-(1,6) pair used for RSA-250; |Res(f0, f1)| = 48 N.
pub fn rsa250_pair() -> (PolyZ, PolyZ) {
    let f0 = poly(&["-3256571715934047438664355774734330386901", "185112968818638292881913"]);
    let f1 = poly(&[
        "-81583513076429048837733781438376984122961112000",
        "-1721614429538740120011760034829385792019395",
        "-3113627253613202265126907420550648326",
        "46262124564021437136744523465879",
        "-66689953322631501408",
        "86130508464000",
    ]);
    (f0, f1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_products() {
        assert_eq!(big(RSA240_P) * big(RSA240_Q), big(RSA240));
        assert_eq!(big(RSA250_P) * big(RSA250_Q), big(RSA250));
    }

    #[test]
    fn dlp_modulus_offset() {
        assert_eq!(big(DLP240_P), big(RSA240) + BigUint::from(49204u32));
    }

    #[test]
    fn target_encoding() {
        let y = dlp240_target();
        // y = 0x54... ("T" leads the big-endian encoding)
        assert_eq!(y.to_bytes_be()[0], 0x54);
    }
}
