"""Known taxicab numbers: values, representations, and how they were built.

The table is plain text: an entry line ``label value power ways`` followed by
``ways`` lines ``pair x y`` with x^power + y^power = value. T7..T14 are the
chain W5 * 79^3 * 101^3 * ... ; T5 and T6 are aliases of W5 and R6.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .arith import Factorization, factorize, parse_factors
from .taxisearch import TaxicabRecord

REGISTRY_TEXT = """\
T2 1729 3 2
pair 1 12
pair 9 10
T3 87539319 3 3
pair 167 436
pair 228 423
pair 255 414
T4 6963472309248 3 4
pair 2421 19083
pair 5436 18948
pair 10200 18072
pair 13322 16630
W5 48988659276962496 3 5
pair 38787 365757
pair 107839 362753
pair 205292 342952
pair 221424 336588
pair 231518 331954
R6 24153319581254312065344 3 6
pair 582162 28906206
pair 3064173 28894803
pair 8519281 28657487
pair 16218068 27093208
pair 17492496 26590452
pair 18289922 26224366
T7 24885189317885898975235988544 3 7
pair 58798362 2919526806
pair 309481473 2918375103
pair 459531128 2915734948
pair 860447381 2894406187
pair 1638024868 2736414008
pair 1766742096 2685635652
pair 1847282122 2648660966
T8 50974398750539071400590819921724352 3 8
pair 7467391974 370779904362
pair 39304147071 370633638081
pair 58360453256 370298338396
pair 109276817387 367589585749
pair 208029158236 347524579016
pair 224376246192 341075727804
pair 234604829494 336379942682
pair 288873662876 299512063576
T9 136897813798023990395783317207361432493888 3 9
pair 1037967484386 51538406706318
pair 4076877805588 51530042142656
pair 5463276442869 51518075693259
pair 8112103002584 51471469037044
pair 15189477616793 51094952419111
pair 28916052994804 48305916483224
pair 31188298220688 47409526164756
pair 32610071299666 46756812032798
pair 40153439139764 41632176837064
T10 7335345315241855602572782233444632535674275447104 3 10
pair 391313741613522 19429979328281886
pair 904069333568884 19429379778270560
pair 1536982932706676 19426825887781312
pair 2059655218961613 19422314536358643
pair 3058262831974168 19404743826965588
pair 5726433061530961 19262797062004847
pair 10901351979041108 18211330514175448
pair 11757988429199376 17873391364113012
pair 12293996879974082 17627318136364846
pair 15137846555691028 15695330667573128
T11 2818537360434849382734382145310807703728251895897826621632 3 11
pair 284485090153030494 14125594971660931122
pair 657258405504578668 14125159098802697120
pair 1117386592077753452 14123302420417013824
pair 1497369344185092651 14120022667932733461
pair 2223357078845220136 14107248762203982476
pair 4163116835733008647 14004053464077523769
pair 6716379921779399326 13600192974314732786
pair 7925282888762885516 13239637283805550696
pair 8548057588027946352 12993955521710159724
pair 8937735731741157614 12815060285137243042
pair 11005214445987377356 11410505395325664056
T12 73914858746493893996583617733225161086864012865017882136931801625152 3 12
pair 845205202844653597674 41967142660804626363462
pair 1933097542618122241026 41965889731136229476526
pair 1952714722754103222628 41965847682542813143520
pair 3319755565063005505892 41960331491058948071104
pair 4448684321573910266121 41950587346428151112631
pair 6605593881249149024056 41912636072508031936196
pair 12368620118962768690237 41606042841774323117699
pair 19954364747606595397546 40406173326689071107206
pair 23546015462514532868036 39334962370186291117816
pair 25396279094031028611792 38605041855000884540004
pair 26554012859002979271194 38073544107142749077782
pair 32696492119028498124676 33900611529512547910376
T13 5988146776742829080553965820313279739849705084894534523771076163371248442670016 3 13
pair 3657202912708816117135398 181591826293301618274700074
pair 8364513066908614936919502 181586404866626464944928002
pair 8449396605357004644311356 181586222922362752472011040
pair 14364582330027624823994684 181562354361812068303667008
pair 19249457059450309721505567 181520191447994609864354337
pair 28582404724165067827090312 181355976285742254187920092
pair 53519019254751900122655499 180029347376357496130283573
pair 54818831102057750995052604 179911586979069103444414128
pair 86342536262893738285181542 174837511984583610680880362
pair 101883608906300383719991772 170202382175796081666789832
pair 109889699639872260803223984 167044016106588827404597308
pair 114899213640905891306456438 164744225351606675259562714
pair 141477721399036311385473052 146687946088200794808196952
T14 2576088109257300012819637660033432990289770725881505682307757452553496715044742867424072384 3 14
pair 27608224788038852868255119502 1370836696688133916355710858626
pair 63143709142093134158805320598 1370795770338163183869261487098
pair 63784494973840028059906426444 1370794396840916418411211340960
pair 108438232009378539796335869516 1370614213077319303624382243392
pair 145314151341790388087645525283 1370295925240911309866010890013
pair 215768573262722097026704765288 1369056264981068276864608774508
pair 404015076354122094025926361951 1359041543344122738287510692577
pair 413827355989433962261652107596 1358152570104992661901882252272
pair 617989830682279948575932296880 1327627770274178602420131034444
pair 651799806248584830314835460558 1319848377971621677029965852738
pair 769119363633661596702217886828 1284857783045084620502596441768
pair 829557342581395696803537855216 1261015277588639058077305078092
pair 867374163775198573472439650462 1243654157179278791534438927986
pair 1068015318841325114648936069548 1107347305019827800007078790648
"""

ALIASES = {"T5": "W5", "T6": "R6"}

# Wilson's number is the seed of the multiplier chain.
SEED_FACTORS = {"W5": "2^6,3^3,7^4,13,19,43,73,97,157"}
_CHAIN = (79, 101, 127, 139, 377, 727, 2971, 4327, 7549)
CHAINS = {"W5": ()} | {
    label: _CHAIN[: i + 1]
    for i, label in enumerate(["R6", "T7", "T8", "T9", "T10", "T11", "T12", "T13", "T14"])
}


@dataclass(frozen=True)
class RegistryEntry:
    label: str
    value: int
    power: int
    ways: int
    pairs: tuple[tuple[int, int], ...]


def parse_registry(text: str) -> dict[str, RegistryEntry]:
    entries: dict[str, RegistryEntry] = {}
    lines = [line.split() for line in text.splitlines() if line.strip()]
    i = 0
    while i < len(lines):
        label, value, power, ways = lines[i]
        k = int(ways)
        pairs = []
        for tag, x, y in lines[i + 1 : i + 1 + k]:
            if tag != "pair":
                raise ValueError(f"expected pair line under {label}")
            pairs.append((int(x), int(y)))
        if len(pairs) != k:
            raise ValueError(f"{label}: expected {k} pairs")
        entries[label] = RegistryEntry(label, int(value), int(power), k, tuple(pairs))
        i += 1 + k
    return entries


REGISTRY = parse_registry(REGISTRY_TEXT)


def resolve(label: str) -> RegistryEntry:
    return REGISTRY[ALIASES.get(label, label)]


def entry_factorization(label: str) -> Factorization:
    """Factorization from the shipped seed and chain, no factoring luck needed."""
    label = ALIASES.get(label, label)
    if label in CHAINS:
        F = parse_factors(SEED_FACTORS["W5"])
        for mu in CHAINS[label]:
            F = F * factorize(mu) ** 3
        return F
    return factorize(REGISTRY[label].value)


def entry_record(label: str) -> TaxicabRecord:
    """Search record for an even registry entry, with W5 as seed where it applies."""
    label = ALIASES.get(label, label)
    e = REGISTRY[label]
    if e.value % 2:
        raise ValueError(f"{label} is odd; the multiplier search needs an even seed")
    medians = tuple(sorted((x + y) // 2 for x, y in e.pairs))
    chain = CHAINS.get(label, ())
    seed_label = "W5" if label in CHAINS else label
    seed_value = e.value // prod(chain) ** 3
    return TaxicabRecord(
        e.value, e.power, e.ways, medians, entry_factorization(label), seed_label, seed_value, chain
    )
